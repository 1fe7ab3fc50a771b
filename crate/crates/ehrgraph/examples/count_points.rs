//! Counts lattice points of tP_G and tQ_G three ways and checks they agree.

use ehrgraph::lattice::{count, dfs_count, enumerate_q_points};
use ehrgraph::multigraph::{dumbbell, k4, star, theta};
use ehrgraph::Polytope;

fn main() -> ehrgraph::Result<()> {
    for (name, g) in [("dumbbell", dumbbell()), ("theta", theta()), ("star", star()), ("K4", k4())] {
        print!("{name:>8}:");
        for t in 0..=5u64 {
            let p = count(&g, Polytope::P, t)?;
            let q = count(&g, Polytope::Q, t)?;
            assert_eq!(p, dfs_count(&g, Polytope::P, t)?);
            assert_eq!(q, dfs_count(&g, Polytope::Q, t)?);
            print!(" t={t}: {p}/{q}");
        }
        println!();
    }
    println!("2Q of the dumbbell:");
    for pt in enumerate_q_points(&dumbbell(), 2)? {
        println!("  {pt}");
    }
    Ok(())
}
