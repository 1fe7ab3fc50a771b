//! Runs every identity check on the small grid with four threads.

use ehrgraph::checks::{run_suites, Grid, SUITES};

fn main() -> ehrgraph::Result<()> {
    let reports = run_suites(&SUITES, Grid::Small, 4)?;
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
    Ok(())
}
