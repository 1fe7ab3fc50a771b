//! Ehrhart quasi-polynomials of small graphs and caterpillars.

use ehrgraph::ehrhart::ehrhart_of;
use ehrgraph::multigraph::{caterpillar, dumbbell, k4, star, theta};
use ehrgraph::Polytope;

fn main() -> ehrgraph::Result<()> {
    let mut graphs = vec![
        ("dumbbell".to_string(), dumbbell()),
        ("star".to_string(), star()),
        ("theta".to_string(), theta()),
        ("K4".to_string(), k4()),
    ];
    for (h, k) in [(1, 1), (2, 1), (1, 2)] {
        graphs.push((format!("G_{{{h},{k}}}"), caterpillar(h, k)?));
    }
    for (name, g) in graphs {
        for polytope in [Polytope::P, Polytope::Q] {
            let qp = ehrhart_of(&g, polytope)?;
            println!("{name} {polytope}: period {}; {qp}", qp.period());
        }
    }
    Ok(())
}
