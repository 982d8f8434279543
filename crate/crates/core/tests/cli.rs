use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vertexlearn"))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vertexlearn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn run_writes_transcript() {
    let g = scratch("p3.txt", "3\n1 2\n2 3\n");
    let t = g.with_file_name("p3.jsonl");
    let o = run(&[
        "run",
        "--concept",
        "vc",
        "--graph",
        g.to_str().unwrap(),
        "--policy",
        "min-card",
        "--transcript",
        t.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains(r#"finished {"kind":"graph","n":3,"edges":[[1,2],[2,3]]}"#));
    let transcript = std::fs::read_to_string(t).unwrap();
    assert_eq!(transcript.lines().count(), 2);
    assert!(transcript
        .lines()
        .last()
        .unwrap()
        .ends_with(r#""answer":{"a":"finished"}}"#));
}

#[test]
fn run_on_random_graph_with_k() {
    let o = run(&[
        "run",
        "--concept",
        "vc",
        "--k",
        "2",
        "--random",
        "9,0.2,5",
        "--policy",
        "random",
        "--seed",
        "3",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn exit_codes() {
    let g = scratch("e5.txt", "5\n");
    let g = g.to_str().unwrap();
    assert_eq!(
        run(&[
            "run",
            "--concept",
            "vc",
            "--graph",
            g,
            "--policy",
            "max-card",
            "--max-rounds",
            "2"
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(
        run(&[
            "run",
            "--concept",
            "vc",
            "--graph",
            g,
            "--policy",
            "sideways"
        ])
        .status
        .code(),
        Some(4)
    );
    assert_eq!(
        run(&["run", "--concept", "xx", "--graph", g]).status.code(),
        Some(4)
    );
    assert_eq!(
        run(&["bench", "--suite", "nope", "--out", "/dev/null"])
            .status
            .code(),
        Some(4)
    );
    let bad = scratch("bad.txt", "3\n2 1\n");
    assert_eq!(
        run(&[
            "oracle",
            "--concept",
            "vc",
            "--graph",
            bad.to_str().unwrap()
        ])
        .status
        .code(),
        Some(4)
    );
    let port = std::net::TcpListener::bind("127.0.0.1:0")
        .unwrap()
        .local_addr()
        .unwrap()
        .to_string();
    assert_eq!(
        run(&["learn", "--connect", &port, "--concept", "vc"])
            .status
            .code(),
        Some(5)
    );
}

#[test]
fn teach_and_oracle() {
    let g = scratch("p3b.txt", "3\n1 2\n2 3\n");
    let g = g.to_str().unwrap();
    let o = run(&["teach", "--concept", "is", "--graph", g]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"n":3,"positives":[[1,3]],"negatives":[[1,2],[2,3]]}"#
    );
    let o = run(&["oracle", "--concept", "vc", "--graph", g]);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(&lines[..2], ["minimal {1,3}", "minimal {2}"]);
    assert_eq!(lines.len(), 2 + 5);
    let o = run(&["oracle", "--concept", "ds", "--k", "1", "--graph", g]);
    assert_eq!(stdout(&o).trim(), "{2}");
}

#[test]
fn bench_writes_csv() {
    let out = scratch("kvc.csv", "");
    let o = run(&[
        "bench",
        "--suite",
        "kvc-independence",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let csv = std::fs::read_to_string(out).unwrap();
    assert!(csv.starts_with("suite,concept,n,k,graph,policy,seed,"));
    assert!(csv.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn serve_and_learn() {
    let g = scratch("c5.txt", "5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
    let port = std::net::TcpListener::bind("127.0.0.1:0")
        .unwrap()
        .local_addr()
        .unwrap()
        .to_string();
    let mut server = bin()
        .args([
            "serve",
            "--listen",
            &port,
            "--graph",
            g.to_str().unwrap(),
            "--concept",
            "ds",
            "--policy",
            "lex-min",
        ])
        .stderr(std::process::Stdio::null())
        .spawn()
        .unwrap();
    let mut result = None;
    for _ in 0..100 {
        let o = run(&["learn", "--connect", &port, "--concept", "ds"]);
        if o.status.code() != Some(5) {
            result = Some(o);
            break;
        }
        std::thread::sleep(std::time::Duration::from_millis(50));
    }
    server.kill().unwrap();
    let _ = server.wait();
    let o = result.expect("server never came up");
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains(r#""kind":"transversal""#));
}
