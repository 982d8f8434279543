// Runs a benchmark suite and writes its CSV report.

use vertexlearn::session::bench::{run_suite, write_csv, Suite};
use vertexlearn::Result;

pub fn run_example() -> Result<()> {
    let rows = run_suite(Suite::KvcIndependence)?;
    let path = std::env::temp_dir().join("kvc-independence.csv");
    write_csv(&rows, std::fs::File::create(&path)?)?;
    let worst = rows.iter().map(|r| r.measured).max().unwrap_or(0);
    assert!(rows.iter().all(|r| r.ok));
    println!(
        "{} rows, at most {worst} queries, written to {}",
        rows.len(),
        path.display()
    );
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
