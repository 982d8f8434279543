// Teaching the complete graph by its `k`-independent sets (it has none)
// needs every `k`-subset as a negative example: drop any one and a graph
// exists that fits the rest but makes the dropped set independent.

use std::collections::BTreeSet;

use vertexlearn::graph::k_subsets;
use vertexlearn::teaching::adversarial_consistent_graph;
use vertexlearn::{Concept, Result};

pub fn run_example() -> Result<()> {
    let (n, k) = (5, 3);
    let concept = Concept::independent_set().exactly(k);
    let all: Vec<_> = k_subsets(n, k)?.collect();
    let missing = all[4];
    let negatives: BTreeSet<_> = all.iter().copied().filter(|s| *s != missing).collect();
    let h = adversarial_consistent_graph(n, k, &negatives, &missing)?;
    for s in &negatives {
        assert!(!concept.holds(&h, s)?);
    }
    assert!(concept.holds(&h, &missing)?);
    println!(
        "without {missing}, {h} fits all {} other negatives",
        negatives.len()
    );
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
