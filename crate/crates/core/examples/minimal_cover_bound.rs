// A graph whose smallest vertex cover has `m` vertices has at most `2^m`
// minimal vertex covers. Stars and perfect matchings reach the bound.

use vertexlearn::graph::{
    all_labeled_graphs, enumerate_minimal_vertex_covers, vertex_cover_number,
};
use vertexlearn::{Graph, Result};

pub fn run_example() -> Result<()> {
    for n in 1..=5 {
        let (mut worst, mut tight) = (0.0f64, 0);
        for g in all_labeled_graphs(n)? {
            let covers = enumerate_minimal_vertex_covers(&g)?.len();
            let bound = 1usize << vertex_cover_number(&g)?;
            assert!(covers <= bound);
            worst = worst.max(covers as f64 / bound as f64);
            tight += usize::from(covers == bound);
        }
        println!("n={n}: max ratio {worst:.2}, {tight} graphs at the bound");
    }
    let matching = Graph::from_edges(6, [(1, 2), (3, 4), (5, 6)])?;
    println!(
        "perfect matching on 6 vertices: {} minimal covers",
        enumerate_minimal_vertex_covers(&matching)?.len()
    );
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
