//! Exhaustive and random generators for `{1,3}`-graphs.

use std::collections::HashMap;

use crate::multigraph::{invariant, isomorphic, single_edge, MultiGraph};

type Key = (usize, usize, Vec<(usize, u8, Vec<usize>)>);

/// Keeps one representative per isomorphism class, in insertion order.
#[derive(Default)]
pub struct IsoClasses {
    buckets: HashMap<Key, Vec<usize>>,
    graphs: Vec<MultiGraph>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false if an isomorphic graph is already present.
    pub fn insert(&mut self, g: MultiGraph) -> bool {
        let bucket = self.buckets.entry(invariant(&g)).or_default();
        if bucket.iter().any(|&i| isomorphic(&self.graphs[i], &g)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn into_vec(self) -> Vec<MultiGraph> {
        self.graphs
    }
}

/// Turns leaf `x` of a tree into an internal node with two new leaves.
fn sprout(g: &MultiGraph, x: usize) -> MultiGraph {
    let n = g.n();
    let mut edges = g.edges().to_vec();
    edges.push((x, n));
    edges.push((x, n + 1));
    MultiGraph::new(n + 2, edges).expect("sprouting keeps the graph valid")
}

/// All `{1,3}`-trees with at most `max_edges` edges up to isomorphism,
/// by increasing size. Every such tree has an odd number of edges.
pub fn one_three_trees(max_edges: usize) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    if max_edges == 0 {
        return out;
    }
    let mut layer = vec![single_edge()];
    while let Some(first) = layer.first() {
        if first.m() > max_edges {
            break;
        }
        out.extend(layer.iter().cloned());
        let mut next = IsoClasses::new();
        for g in &layer {
            for x in g.leaves() {
                next.insert(sprout(g, x));
            }
        }
        layer = next.into_vec();
    }
    out
}

/// A random `{1,3}`-tree with `m` edges (rounded down to odd), grown by
/// sprouting leaves. `pick(len)` must return an index below `len`.
pub fn random_tree(m: usize, mut pick: impl FnMut(usize) -> usize) -> MultiGraph {
    let mut g = single_edge();
    while g.m() + 2 <= m {
        let leaves = g.leaves();
        let x = leaves[pick(leaves.len())];
        g = sprout(&g, x);
    }
    g
}

/// Every connected `{1,3}`-multigraph with exactly `m` edges, up to
/// isomorphism.
pub fn connected_one_three_graphs(m: usize) -> Vec<MultiGraph> {
    if m == 0 {
        return Vec::new();
    }
    if m == 1 {
        return vec![single_edge()];
    }
    let mut classes = IsoClasses::new();
    // 3i + leaves = 2m.
    for i in 1..=(2 * m / 3) {
        let leaves = 2 * m - 3 * i;
        if i + leaves > m + 1 {
            continue;
        }
        let mut state = Pairing { i, leaves, stubs: vec![3; i], touched: vec![false; i], edges: Vec::new(), used_leaves: 0 };
        state.run(&mut |edges| {
            if let Ok(g) = MultiGraph::new(i + leaves, edges.to_vec()) {
                if g.stats().connected {
                    classes.insert(g);
                }
            }
        });
    }
    classes.into_vec()
}

/// Connected `{1,3}`-graphs with `1..=max_edges` edges.
pub fn connected_one_three_graphs_upto(max_edges: usize) -> Vec<MultiGraph> {
    (1..=max_edges).flat_map(connected_one_three_graphs).collect()
}

struct Pairing {
    i: usize,
    leaves: usize,
    stubs: Vec<usize>,
    touched: Vec<bool>,
    edges: Vec<(usize, usize)>,
    used_leaves: usize,
}

impl Pairing {
    fn run(&mut self, emit: &mut impl FnMut(&[(usize, usize)])) {
        let Some(v) = (0..self.i).find(|&v| self.stubs[v] > 0) else {
            if self.used_leaves == self.leaves {
                emit(&self.edges);
            }
            return;
        };
        let was = self.touched[v];
        self.touched[v] = true;
        if self.stubs[v] >= 2 {
            self.stubs[v] -= 2;
            self.edges.push((v, v));
            self.run(emit);
            self.edges.pop();
            self.stubs[v] += 2;
        }
        let mut fresh_tried = false;
        for w in v + 1..self.i {
            if self.stubs[w] == 0 {
                continue;
            }
            // Untouched nodes are interchangeable; try only the first.
            if !self.touched[w] {
                if fresh_tried {
                    continue;
                }
                fresh_tried = true;
            }
            let tw = self.touched[w];
            self.touched[w] = true;
            self.stubs[v] -= 1;
            self.stubs[w] -= 1;
            self.edges.push((v, w));
            self.run(emit);
            self.edges.pop();
            self.stubs[v] += 1;
            self.stubs[w] += 1;
            self.touched[w] = tw;
        }
        if self.used_leaves < self.leaves {
            let leaf = self.i + self.used_leaves;
            self.used_leaves += 1;
            self.stubs[v] -= 1;
            self.edges.push((v, leaf));
            self.run(emit);
            self.edges.pop();
            self.stubs[v] += 1;
            self.used_leaves -= 1;
        }
        self.touched[v] = was;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        // Unlabelled trees with all degrees 1 or 3, by number of internal
        // nodes 0..=5: 1, 1, 1, 1, 2, 2.
        let trees = one_three_trees(11);
        let mut by_m = [0usize; 12];
        for t in &trees {
            assert!(t.stats().is_tree);
            by_m[t.m()] += 1;
        }
        assert_eq!(by_m, [0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2]);
    }

    #[test]
    fn small_graph_counts() {
        // m = 3: dumbbell, theta, star.
        let g3 = connected_one_three_graphs(3);
        assert_eq!(g3.len(), 3);
        for g in &g3 {
            let s = g.stats();
            assert!(s.one_three && s.connected);
        }
        // m = 2: a loop with one leg.
        assert_eq!(connected_one_three_graphs(2).len(), 1);
        for m in 1..=7 {
            for g in connected_one_three_graphs(m) {
                assert_eq!(g.m(), m);
                assert!(g.stats().one_three);
            }
        }
    }

    #[test]
    fn brute_force_agrees_for_small_m() {
        // Oracle: every multigraph on n nodes with m edges as a multiset
        // of node pairs, filtered and deduplicated.
        for m in 1..=5 {
            let mut oracle = IsoClasses::new();
            for n in 1..=m + 1 {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
                let mut idx = vec![0usize; m];
                loop {
                    let edges: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
                    if let Ok(g) = MultiGraph::new(n, edges) {
                        let s = g.stats();
                        if s.one_three && s.connected && g.degrees().iter().all(|&d| d > 0) {
                            oracle.insert(g);
                        }
                    }
                    // Next non-decreasing index vector.
                    let mut p = m;
                    while p > 0 && idx[p - 1] == pairs.len() - 1 {
                        p -= 1;
                    }
                    if p == 0 {
                        break;
                    }
                    idx[p - 1] += 1;
                    let base = idx[p - 1];
                    for q in idx.iter_mut().skip(p) {
                        *q = base;
                    }
                }
            }
            let got = connected_one_three_graphs(m);
            assert_eq!(got.len(), oracle.len(), "m = {m}");
            let mut check = IsoClasses::new();
            for g in oracle.into_vec() {
                check.insert(g);
            }
            for g in got {
                assert!(!check.insert(g), "generated graph missing from oracle at m = {m}");
            }
        }
    }

    #[test]
    fn random_trees_have_requested_size() {
        let mut s = 7usize;
        let t = random_tree(13, |len| {
            s = s.wrapping_mul(31).wrapping_add(17);
            s % len
        });
        assert_eq!(t.m(), 13);
        assert!(t.stats().is_tree);
    }
}
