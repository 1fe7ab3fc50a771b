//! Moves a graph to its caterpillar by NNI moves and carries a lattice
//! point of 2Q along.

use ehrgraph::lattice::enumerate_q_points;
use ehrgraph::multigraph::k4;
use ehrgraph::nni::{canonicalize, weighted_nni};

fn main() -> ehrgraph::Result<()> {
    let g = k4();
    let (target, moves) = canonicalize(&g)?;
    let mut point = enumerate_q_points(&g, 2)?.pop().expect("2Q is not empty");
    let mut cur = g.clone();
    println!("start {point}");
    for m in &moves {
        point = weighted_nni(&cur, *m, &point)?;
        cur = ehrgraph::nni::apply_nni(&cur, *m)?;
        println!("{m:>14} -> {point}");
    }
    print!("caterpillar:\n{}", target.to_g13());
    Ok(())
}
