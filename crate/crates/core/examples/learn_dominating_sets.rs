// Learns the dominating sets of a hidden graph. The hypothesis is a family
// of closed neighbourhoods; a set dominates iff it meets all of them.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vertexlearn::concepts::equivalent_by_enumeration;
use vertexlearn::session::{run_session, SessionConfig};
use vertexlearn::{Concept, Graph, Hypothesis, Learner, Result, TeacherPolicy};

pub fn run_example() -> Result<()> {
    let secret = Graph::random(10, 0.25, &mut ChaCha8Rng::seed_from_u64(7))?;
    let config = SessionConfig::new(
        Learner::DominatingSet,
        secret.clone(),
        Concept::dominating_set(),
        TeacherPolicy::Random(3),
    );
    let report = run_session(&config)?;
    let t = &report.transcript;
    let learned = report.result?;
    assert!(equivalent_by_enumeration(
        &Concept::dominating_set(),
        &secret,
        &learned
    )?);
    if let Hypothesis::Transversal(family) = &learned {
        for s in family.family() {
            println!("must meet {s}");
        }
    }
    println!(
        "{} equivalence (bound 11), {} membership (bound 110)",
        t.equivalence_count, t.membership_count
    );
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
