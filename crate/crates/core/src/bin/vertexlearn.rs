use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vertexlearn::concepts::{solution_set, BaseConcept};
use vertexlearn::graph::enumerate_minimal_vertex_covers;
use vertexlearn::learners::KVertexCoverOptions;
use vertexlearn::session::{
    bench, connect_learner, run_session, SessionConfig, SessionReport, TeacherServer,
};
use vertexlearn::teaching::{teaching_set_is, teaching_set_vc};
use vertexlearn::{Concept, Error, Graph, Learner, Result, TeacherPolicy};

#[derive(Parser)]
#[command(
    name = "vertexlearn",
    version,
    about = "Learn and teach vertex-set concepts in graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConceptArgs {
    /// vc, is or ds
    #[arg(long)]
    concept: BaseConcept,
    /// Restrict to sets of exactly this many vertices.
    #[arg(long)]
    k: Option<usize>,
}

impl ConceptArgs {
    fn concept(&self) -> Concept {
        let c = Concept::new(self.concept);
        match self.k {
            Some(k) => c.exactly(k),
            None => c,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a learner against an in-process teacher.
    Run {
        #[command(flatten)]
        concept: ConceptArgs,
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        graph: Option<PathBuf>,
        /// Random secret as N,P,SEED.
        #[arg(long)]
        random: Option<String>,
        #[arg(long, default_value = "lex-min")]
        policy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the transcript as JSON lines.
        #[arg(long)]
        transcript: Option<PathBuf>,
        #[arg(long)]
        max_rounds: Option<usize>,
        /// vc, is, ds or kvc; defaults to the natural learner for the concept.
        #[arg(long)]
        learner: Option<String>,
    },
    /// Print the teaching set of a graph as JSON.
    Teach {
        #[arg(long)]
        concept: BaseConcept,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Print the solution set of a graph, one set per line.
    Oracle {
        #[command(flatten)]
        concept: ConceptArgs,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Run a benchmark suite and write its CSV report.
    Bench {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Serve a teacher over TCP.
    Serve {
        #[arg(long)]
        listen: String,
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        concept: ConceptArgs,
        #[arg(long, default_value = "lex-min")]
        policy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a learner against a served teacher.
    Learn {
        #[arg(long)]
        connect: String,
        #[command(flatten)]
        concept: ConceptArgs,
        #[arg(long)]
        transcript: Option<PathBuf>,
        #[arg(long)]
        max_rounds: Option<usize>,
    },
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    Graph::parse(&text)
}

fn random_graph(spec: &str) -> Result<Graph> {
    let bad = || Error::Usage(format!("--random expects N,P,SEED, got {spec:?}"));
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [n, p, seed] = parts[..] else {
        return Err(bad());
    };
    let n: usize = n.parse().map_err(|_| bad())?;
    let p: f64 = p.parse().map_err(|_| bad())?;
    let seed: u64 = seed.parse().map_err(|_| bad())?;
    if !(0.0..=1.0).contains(&p) {
        return Err(bad());
    }
    Graph::random(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn pick_learner(name: Option<&str>, concept: &Concept) -> Result<Learner> {
    Ok(match name {
        None => Learner::for_concept(concept)?,
        Some("vc") => Learner::VertexCover,
        Some("is") => Learner::IndependentSet,
        Some("ds") => Learner::DominatingSet,
        Some("kvc") => Learner::KVertexCover {
            k: concept
                .k()
                .ok_or_else(|| Error::Usage("learner kvc needs --k".into()))?,
            options: KVertexCoverOptions::default(),
        },
        Some(other) => return Err(Error::Usage(format!("unknown learner {other:?}"))),
    })
}

fn report(report: SessionReport, transcript: Option<&Path>) -> Result<()> {
    if let Some(path) = transcript {
        fs::write(path, report.transcript.to_jsonl())?;
    }
    let t = &report.transcript;
    println!(
        "rounds={} equivalence={} membership={}",
        t.total(),
        t.equivalence_count,
        t.membership_count
    );
    let h = report.result?;
    println!("finished {}", h.to_json());
    Ok(())
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Run {
            concept,
            graph,
            random,
            policy,
            seed,
            transcript,
            max_rounds,
            learner,
        } => {
            let concept = concept.concept();
            let secret = match (&graph, &random) {
                (Some(path), _) => read_graph(path)?,
                (None, Some(spec)) => random_graph(spec)?,
                (None, None) => {
                    return Err(Error::Usage(
                        "one of --graph or --random is required".into(),
                    ))
                }
            };
            let mut config = SessionConfig::new(
                pick_learner(learner.as_deref(), &concept)?,
                secret,
                concept,
                TeacherPolicy::parse(&policy, seed)?,
            );
            config.max_rounds = max_rounds;
            report(run_session(&config)?, transcript.as_deref())
        }
        Command::Teach { concept, graph } => {
            let g = read_graph(&graph)?;
            let ex = match concept {
                BaseConcept::VertexCover => teaching_set_vc(&g)?,
                BaseConcept::IndependentSet => teaching_set_is(&g)?,
                BaseConcept::DominatingSet => {
                    return Err(Error::Usage(
                        "teaching sets exist for vc and is only".into(),
                    ))
                }
            };
            println!("{}", ex.to_json());
            Ok(())
        }
        Command::Oracle { concept, graph } => {
            let g = read_graph(&graph)?;
            let concept = concept.concept();
            if concept == Concept::vertex_cover() {
                for s in enumerate_minimal_vertex_covers(&g)? {
                    println!("minimal {s}");
                }
            }
            for s in solution_set(&concept, &g)? {
                println!("{s}");
            }
            Ok(())
        }
        Command::Bench { suite, out } => {
            let rows = bench::bench(&suite, &out)?;
            let failed = rows.iter().filter(|r| !r.ok).count();
            println!(
                "{suite}: {} rows, {failed} over bound, written to {}",
                rows.len(),
                out.display()
            );
            if failed > 0 {
                return Err(Error::Internal(format!("{failed} rows exceed their bound")));
            }
            Ok(())
        }
        Command::Serve {
            listen,
            graph,
            concept,
            policy,
            seed,
        } => {
            let server = TeacherServer::bind(
                listen.as_str(),
                read_graph(&graph)?,
                concept.concept(),
                TeacherPolicy::parse(&policy, seed)?,
            )?;
            eprintln!("serving on {}", server.local_addr()?);
            server.serve()
        }
        Command::Learn {
            connect,
            concept,
            transcript,
            max_rounds,
        } => {
            let concept = concept.concept();
            let learner = Learner::for_concept(&concept)?;
            report(
                connect_learner(connect.as_str(), &learner, max_rounds)?,
                transcript.as_deref(),
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
