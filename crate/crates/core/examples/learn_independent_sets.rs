// Learns a hidden graph from its independent sets. Each positive
// counterexample is a set the hypothesis wrongly spans an edge in.

use vertexlearn::learners::learn_independent_sets;
use vertexlearn::{Concept, Graph, Result, TeacherPolicy, TeacherSession};

pub fn run_example() -> Result<()> {
    let secret = Graph::from_edges(4, [(1, 2), (3, 4)])?;
    let mut teacher = TeacherSession::new(
        secret.clone(),
        Concept::independent_set(),
        TeacherPolicy::MaxCardinality,
    )?;
    let learned = learn_independent_sets(&mut teacher)?;
    assert_eq!(learned, secret);
    println!(
        "learned {learned} with {} equivalence queries",
        teacher.equivalence_count()
    );
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
