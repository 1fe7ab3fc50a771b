//! Parses a `.g13` graph and prints its shape and internally Eulerian
//! subgraphs.
//!
//! cargo run --example graph_stats -- data/dumbbell.g13

use ehrgraph::multigraph::{dumbbell, enumerate_internally_eulerian, eulerian_count_formula};
use ehrgraph::MultiGraph;

fn main() -> ehrgraph::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(path) => MultiGraph::parse_g13(&std::fs::read_to_string(path).expect("readable file"))?,
        None => dumbbell(),
    };
    let s = g.require_one_three()?;
    println!("n={} m={} h={} k={} connected={}", s.n, s.m, s.h, s.k, s.connected);
    let subsets = enumerate_internally_eulerian(&g)?;
    println!("N_G = {} (formula {})", subsets.len(), eulerian_count_formula(&s));
    for h in subsets {
        println!("  {:?}", h.iter().collect::<Vec<_>>());
    }
    Ok(())
}
