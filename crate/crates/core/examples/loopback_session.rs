// Serves a teacher on a loopback socket and learns from it over the wire.
// The transcript matches an in-process run byte for byte.

use vertexlearn::session::{connect_learner, run_session, SessionConfig, TeacherServer};
use vertexlearn::{Concept, Graph, Learner, Result, TeacherPolicy};

pub fn run_example() -> Result<()> {
    let secret = Graph::empty(4)?;
    let (concept, policy) = (Concept::dominating_set(), TeacherPolicy::LexMin);
    let server = TeacherServer::bind("127.0.0.1:0", secret.clone(), concept, policy)?;
    let addr = server.local_addr()?;
    let handle = server.spawn(1);

    let remote = connect_learner(addr, &Learner::DominatingSet, None)?;
    handle.join().expect("server thread")?;
    let local = run_session(&SessionConfig::new(
        Learner::DominatingSet,
        secret,
        concept,
        policy,
    ))?;

    print!("{}", remote.transcript.to_jsonl());
    assert_eq!(remote.transcript.to_jsonl(), local.transcript.to_jsonl());
    println!("finished {}", remote.result?.to_json());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
