// Runs the vertex-cover learner unchanged against a teacher that only
// speaks about covers of one size.

use vertexlearn::concepts::solution_set;
use vertexlearn::learners::learn_fixed_cardinality;
use vertexlearn::{Concept, Graph, Learner, Result, TeacherPolicy, TeacherSession};

pub fn run_example() -> Result<()> {
    let secret = Graph::from_edges(5, [(1, 2), (1, 3), (4, 5)])?;
    for k in 1..=3 {
        let concept = Concept::vertex_cover().exactly(k);
        let mut teacher = TeacherSession::new(secret.clone(), concept, TeacherPolicy::LexMin)?;
        let h = learn_fixed_cardinality(Learner::VertexCover, &mut teacher)?;
        assert_eq!(
            solution_set(&concept, &h)?,
            solution_set(&concept, &secret)?
        );
        println!(
            "k={k}: {} queries, {} covers of size {k}, learned {h}",
            teacher.equivalence_count(),
            solution_set(&concept, &h)?.len()
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
