// Learns a hidden graph from its vertex covers using equivalence queries only.

use vertexlearn::session::{run_session, SessionConfig};
use vertexlearn::{Concept, Graph, Learner, Result, TeacherPolicy};

pub fn run_example() -> Result<()> {
    let secret = Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])?;
    for policy in TeacherPolicy::grid(1) {
        let config = SessionConfig::new(
            Learner::VertexCover,
            secret.clone(),
            Concept::vertex_cover(),
            policy,
        );
        let report = run_session(&config)?;
        let learned = report.result?;
        assert_eq!(learned.as_graph(), Some(&secret));
        println!(
            "{:>8}: {} equivalence queries (bound {})",
            policy.name(),
            report.transcript.equivalence_count,
            5 * 4 / 2 + 1
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
