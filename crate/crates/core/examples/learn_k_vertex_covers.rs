// Learns the `k`-element vertex covers. The number of queries does not
// grow with the number of vertices.

use vertexlearn::learners::{k_vertex_cover_query_bound, KVertexCoverOptions};
use vertexlearn::session::{run_session, SessionConfig};
use vertexlearn::{Concept, Graph, Learner, Result, TeacherPolicy};

pub fn run_example() -> Result<()> {
    for k in 1..=2 {
        let learner = Learner::KVertexCover {
            k,
            options: KVertexCoverOptions::default(),
        };
        for n in [6, 10, 16, 24] {
            let secret = Graph::from_edges(n, [(1, 2)])?;
            let config = SessionConfig::new(
                learner,
                secret,
                Concept::vertex_cover().exactly(k),
                TeacherPolicy::LexMin,
            );
            let report = run_session(&config)?;
            report.result?;
            println!(
                "k={k} n={n:>2}: {} queries (bound {})",
                report.transcript.total(),
                k_vertex_cover_query_bound(k)
            );
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
