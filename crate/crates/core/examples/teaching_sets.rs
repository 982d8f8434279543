// Builds the teaching sets that pin down a graph from its vertex covers or
// independent sets, and checks that no other graph fits them.

use vertexlearn::teaching::{
    consistent_hypothesis, teaching_set_is, teaching_set_vc, verify_teaching_set,
};
use vertexlearn::{Concept, Graph, Result};

pub fn run_example() -> Result<()> {
    let g = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)])?;
    for (concept, ex) in [
        (Concept::vertex_cover(), teaching_set_vc(&g)?),
        (Concept::independent_set(), teaching_set_is(&g)?),
    ] {
        println!("{concept}: {}", ex.to_json());
        assert!(verify_teaching_set(&g, &concept, &ex)?);
        assert_eq!(consistent_hypothesis(&concept, &ex)?, g);
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
