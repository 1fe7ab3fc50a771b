//! Vertices and 1-skeleton of P_T for a small {1,3}-tree.

use ehrgraph::ehrhart::ratio_string;
use ehrgraph::multigraph::caterpillar;
use ehrgraph::tree_geometry::{leaf_path_collections, skeleton_edges, tree_vertices_p};

fn main() -> ehrgraph::Result<()> {
    let t = caterpillar(4, 0)?;
    let sets = leaf_path_collections(&t)?;
    for (i, (h, v)) in sets.iter().zip(tree_vertices_p(&t)?).enumerate() {
        let coords: Vec<String> = v.iter().map(ratio_string).collect();
        println!("v{i} H={:?} ({})", h.iter().collect::<Vec<_>>(), coords.join(", "));
    }
    for (a, b) in skeleton_edges(&t)? {
        println!("v{a} -- v{b}");
    }
    Ok(())
}
