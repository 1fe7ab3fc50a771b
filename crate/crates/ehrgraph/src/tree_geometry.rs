//! Vertices, skeleton and symmetries of `P_T` and `Q_T` for `{1,3}`-trees.
//!
//! Vertices of `P_T` are the points `½·1_H` for `H` a collection of disjoint
//! leaf-paths, and each `H` is fixed by the set of leaves it touches. Two
//! vertices span an edge of the polytope exactly when their collections
//! differ by one leaf-path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::half_sums;
use crate::multigraph::{is_internally_eulerian, EdgeSubset, MultiGraph};
use crate::polytope::{build_p_system, QPoint};

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn require_tree(t: &MultiGraph) -> Result<()> {
    let s = t.stats();
    if s.one_three && s.is_tree {
        Ok(())
    } else {
        Err(Error::NotTree)
    }
}

/// Number of leaf endpoints of `e`.
fn leaf_ends(t: &MultiGraph, e: usize) -> usize {
    let (u, v) = t.endpoints(e);
    (t.degree(u) == 1) as usize + (t.degree(v) == 1) as usize
}

/// Leaf-path collection touching exactly the leaves on the edges of `x`.
///
/// Parity is counted over leaf nodes, so on the single edge `x = {0}`
/// selects both leaves and gives the whole edge.
pub fn leaf_completion(t: &MultiGraph, x: EdgeSubset) -> Result<EdgeSubset> {
    require_tree(t)?;
    let leaf_edges = t.leaf_edges();
    if x.iter().any(|e| !leaf_edges.contains(&e)) {
        return Err(Error::MalformedGraph("completion set must contain only leaf-edges".into()));
    }
    let ends: usize = x.iter().map(|e| leaf_ends(t, e)).sum();
    if ends % 2 == 1 {
        return Err(Error::OddLeafSet);
    }
    // Leaf pruning: a node with one undetermined edge fixes it by parity.
    let m = t.m();
    let mut known: Vec<Option<bool>> = vec![None; m];
    for &e in &leaf_edges {
        known[e] = Some(x.contains(e));
    }
    let internal = t.internal_nodes();
    loop {
        let mut progress = false;
        for &v in &internal {
            let inc = t.incidence(v);
            let open: Vec<usize> = inc.iter().copied().filter(|&e| known[e].is_none()).collect();
            if open.len() == 1 {
                let parity = inc.iter().filter(|&&e| known[e] == Some(true)).count() % 2 == 1;
                known[open[0]] = Some(parity);
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    Ok(EdgeSubset::from_edges((0..m).filter(|&e| known[e] == Some(true))))
}

/// The unique `{0,½}`-point of `P_T` that is `½` on the leaf-edges in `x`
/// and `0` on the other leaf-edges.
pub fn complete_from_leaves(t: &MultiGraph, x: EdgeSubset) -> Result<Vec<BigRational>> {
    let h = leaf_completion(t, x)?;
    Ok(half_indicator(t.m(), h))
}

pub fn half_indicator(m: usize, h: EdgeSubset) -> Vec<BigRational> {
    (0..m).map(|e| if h.contains(e) { half() } else { BigRational::zero() }).collect()
}

/// All leaf-path collections of `t`, one per even set of leaves, ordered by
/// the bitmask of selected leaf-edges.
pub fn leaf_path_collections(t: &MultiGraph) -> Result<Vec<EdgeSubset>> {
    require_tree(t)?;
    let leaf_edges = t.leaf_edges();
    let mut out = Vec::new();
    for mask in 0u64..(1 << leaf_edges.len()) {
        let x = EdgeSubset::from_edges(
            leaf_edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
        );
        let ends: usize = x.iter().map(|e| leaf_ends(t, e)).sum();
        if ends % 2 == 0 {
            out.push(leaf_completion(t, x)?);
        }
    }
    Ok(out)
}

pub fn tree_vertices_p(t: &MultiGraph) -> Result<Vec<Vec<BigRational>>> {
    Ok(leaf_path_collections(t)?.into_iter().map(|h| half_indicator(t.m(), h)).collect())
}

/// Vertices `(1_H, z)` of `Q_T`, where `z_v = 1` on internal nodes of paths.
pub fn tree_vertices_q(t: &MultiGraph) -> Result<Vec<QPoint>> {
    Ok(leaf_path_collections(t)?
        .into_iter()
        .map(|h| {
            let w = h.indicator(t.m());
            let z = half_sums(t, &w);
            QPoint { w, z }
        })
        .collect())
}

/// Whether `h` is a single leaf-path of `t`.
pub fn is_leaf_path(t: &MultiGraph, h: EdgeSubset) -> bool {
    if h.is_empty() {
        return false;
    }
    let mut deg = vec![0usize; t.n()];
    for e in h.iter() {
        let (u, v) = t.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    let ends: Vec<usize> = (0..t.n()).filter(|&v| deg[v] == 1).collect();
    if deg.iter().any(|&d| d > 2) || ends.len() != 2 {
        return false;
    }
    if ends.iter().any(|&v| t.degree(v) != 1) {
        return false;
    }
    // In a forest, max degree 2 with two ends is one path iff connected.
    match t.path_edges(ends[0], ends[1]) {
        Some(p) => EdgeSubset::from_edges(p) == h,
        None => false,
    }
}

/// Vertices `½·1_{h1}` and `½·1_{h2}` are adjacent in the skeleton of `P_T`
/// iff `h1 △ h2` is one leaf-path.
pub fn skeleton_adjacent(t: &MultiGraph, h1: EdgeSubset, h2: EdgeSubset) -> bool {
    h1 != h2 && is_leaf_path(t, h1.symmetric_difference(h2))
}

/// Skeleton as index pairs into [`leaf_path_collections`].
pub fn skeleton_edges(t: &MultiGraph) -> Result<Vec<(usize, usize)>> {
    let hs = leaf_path_collections(t)?;
    let mut out = Vec::new();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            if skeleton_adjacent(t, hs[i], hs[j]) {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// The reflection `x_e ↦ ½ − x_e` on the edges of `h`, identity elsewhere.
pub fn isometry_apply(t: &MultiGraph, h: EdgeSubset, point: &[BigRational]) -> Result<Vec<BigRational>> {
    require_tree(t)?;
    if !is_internally_eulerian(t, h) {
        return Err(Error::NotEulerian);
    }
    let sys = build_p_system(t)?;
    if !sys.contains_rational(&BigRational::one(), point)? {
        return Err(Error::PointOutside);
    }
    Ok(point
        .iter()
        .enumerate()
        .map(|(e, x)| if h.contains(e) { half() - x } else { x.clone() })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::one_three_trees;
    use crate::lattice::enumerate_p_points;
    use crate::multigraph::{caterpillar, dumbbell, single_edge, star};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn s(v: &[usize]) -> EdgeSubset {
        EdgeSubset::from_edges(v.iter().copied())
    }

    #[test]
    fn star_vertices() {
        let p = tree_vertices_p(&star()).unwrap();
        let h = r(1, 2);
        let z = r(0, 1);
        let mut want = vec![
            vec![z.clone(), z.clone(), z.clone()],
            vec![h.clone(), h.clone(), z.clone()],
            vec![z.clone(), h.clone(), h.clone()],
            vec![h.clone(), z.clone(), h.clone()],
        ];
        want.sort();
        let mut got = p.clone();
        got.sort();
        assert_eq!(got, want);

        let q = tree_vertices_q(&star()).unwrap();
        let mut qs: Vec<(Vec<i64>, Vec<i64>)> = q.into_iter().map(|p| (p.w, p.z)).collect();
        qs.sort();
        assert_eq!(
            qs,
            vec![
                (vec![0, 0, 0], vec![0]),
                (vec![0, 1, 1], vec![1]),
                (vec![1, 0, 1], vec![1]),
                (vec![1, 1, 0], vec![1])
            ]
        );
    }

    #[test]
    fn single_edge_vertices() {
        let p = tree_vertices_p(&single_edge()).unwrap();
        assert_eq!(p, vec![vec![r(0, 1)], vec![r(1, 2)]]);
        let q = tree_vertices_q(&single_edge()).unwrap();
        assert_eq!(q.iter().map(|p| p.w[0]).collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn completion_examples() {
        let t = star();
        assert_eq!(complete_from_leaves(&t, s(&[0, 1])).unwrap(), vec![r(1, 2), r(1, 2), r(0, 1)]);
        assert_eq!(complete_from_leaves(&t, s(&[])).unwrap(), vec![r(0, 1); 3]);
        assert_eq!(complete_from_leaves(&t, s(&[0])), Err(Error::OddLeafSet));

        // caterpillar(4,0): legs 0,1 hang from node 0, legs 2,3 from node 1,
        // path edge 4.
        let c = caterpillar(4, 0).unwrap();
        assert_eq!(leaf_completion(&c, s(&[0, 1])).unwrap(), s(&[0, 1]));
        assert_eq!(leaf_completion(&c, s(&[0, 2])).unwrap(), s(&[0, 2, 4]));
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(tree_vertices_p(&dumbbell()), Err(Error::NotTree));
        assert_eq!(skeleton_edges(&dumbbell()), Err(Error::NotTree));
    }

    /// Brute force: all `{0,½}` points of `P_T`.
    fn half_points_in_p(t: &MultiGraph) -> Vec<Vec<BigRational>> {
        let sys = build_p_system(t).unwrap();
        let one = BigRational::one();
        (0u64..1 << t.m())
            .map(|bits| half_indicator(t.m(), EdgeSubset::from_bits(bits)))
            .filter(|p| sys.contains_rational(&one, p).unwrap())
            .collect()
    }

    #[test]
    fn vertices_match_half_point_oracle() {
        for t in one_three_trees(11) {
            let mut got = tree_vertices_p(&t).unwrap();
            got.sort();
            let mut want = half_points_in_p(&t);
            want.sort();
            assert_eq!(got, want, "{t}");
            assert_eq!(got.len(), 1 << t.m().div_ceil(2));
            for h in leaf_path_collections(&t).unwrap() {
                assert!(is_internally_eulerian(&t, h));
            }
        }
    }

    #[test]
    fn supporting_functional_has_unique_optimum() {
        // Over the integer points of 2P_T, 2*sum_X w - 2*sum_{rest} w on the
        // leaf-edges peaks only at twice the vertex.
        for t in one_three_trees(7) {
            let pts = enumerate_p_points(&t, 2).unwrap();
            let leaves = t.leaf_edges();
            for h in leaf_path_collections(&t).unwrap() {
                let f = |w: &[i64]| -> i64 {
                    leaves.iter().map(|&e| if h.contains(e) { 2 * w[e] } else { -2 * w[e] }).sum()
                };
                let best = pts.iter().map(|p| f(&p.w)).max().unwrap();
                let argmax: Vec<&Vec<i64>> = pts.iter().map(|p| &p.w).filter(|w| f(w) == best).collect();
                assert_eq!(argmax, vec![&h.indicator(t.m())], "{t} {h}");
            }
        }
    }

    #[test]
    fn skeleton_examples_and_regularity() {
        let t = star();
        assert!(skeleton_adjacent(&t, s(&[0, 1]), s(&[])));
        assert!(skeleton_adjacent(&t, s(&[0, 1]), s(&[1, 2])));
        assert!(!skeleton_adjacent(&t, s(&[0, 1]), s(&[0, 1])));

        for t in one_three_trees(11) {
            let l = t.leaves().len();
            let nv = leaf_path_collections(&t).unwrap().len();
            let mut deg = vec![0usize; nv];
            for (i, j) in skeleton_edges(&t).unwrap() {
                deg[i] += 1;
                deg[j] += 1;
            }
            assert!(deg.iter().all(|&d| d == l * (l - 1) / 2), "{t}");
        }
    }

    #[test]
    fn isometries() {
        let t = star();
        let origin = vec![r(0, 1); 3];
        assert_eq!(isometry_apply(&t, s(&[]), &origin).unwrap(), origin);
        let img = isometry_apply(&t, s(&[0, 1]), &origin).unwrap();
        assert_eq!(img, vec![r(1, 2), r(1, 2), r(0, 1)]);
        assert_eq!(isometry_apply(&t, s(&[0, 1]), &img).unwrap(), origin);
        assert_eq!(isometry_apply(&t, s(&[0, 1]), &[r(1, 1), r(0, 1), r(0, 1)]), Err(Error::PointOutside));

        for t in one_three_trees(9) {
            let hs = leaf_path_collections(&t).unwrap();
            let zero = vec![r(0, 1); t.m()];
            for &h in &hs {
                assert_eq!(isometry_apply(&t, h, &zero).unwrap(), half_indicator(t.m(), h));
                for &hv in &hs {
                    let v = half_indicator(t.m(), hv);
                    let img = isometry_apply(&t, h, &v).unwrap();
                    assert_eq!(img, half_indicator(t.m(), h.symmetric_difference(hv)));
                }
            }
        }
    }
}
