//! Prints the H-representation of P_G and Q_G for the dumbbell and tests a
//! few points.

use ehrgraph::multigraph::dumbbell;
use ehrgraph::polytope::{build_p_system, build_q_system};

fn main() -> ehrgraph::Result<()> {
    let g = dumbbell();
    let p = build_p_system(&g)?;
    println!("P_G, dimension {}:", p.dim());
    for row in p.describe() {
        println!("  {row}");
    }
    let q = build_q_system(&g)?;
    println!("Q_G, dimension {}:", q.dim());
    for row in q.describe() {
        println!("  {row}");
    }
    // (w, z) with both loops of weight 1 and the bridge 0.
    let x = [1, 1, 0, 1, 1];
    println!("{x:?} in 1*Q: {}", q.contains(1, &x)?);
    println!("{x:?} in 0*Q: {}", q.contains(0, &x)?);
    Ok(())
}
