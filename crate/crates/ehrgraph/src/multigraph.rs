//! Multigraphs with loops and parallel edges.
//!
//! Nodes are `0..n`. Edge `e` is the `e`-th entry of the edge list and its
//! endpoints are stored as `(min, max)`; a loop has equal endpoints and adds
//! 2 to the degree of its node. Edge IDs index polytope coordinates, so they
//! never move once a graph is built.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    /// Number of leaves (degree-1 nodes).
    pub h: usize,
    /// Cyclomatic number `m - n + c` with `c` the number of components.
    pub k: usize,
    pub components: usize,
    pub connected: bool,
    pub is_tree: bool,
    pub is_cubic: bool,
    pub one_three: bool,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::MalformedGraph(format!(
                    "edge {i} = ({u},{v}) references a node outside 0..{n}"
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        Ok(MultiGraph { n, edges: norm })
    }

    /// Parses the `.g13` edge-list format: one `u v` pair per line, `#`
    /// comments and blank lines ignored. Node IDs are relabelled to `0..n` in
    /// increasing order of the IDs that occur.
    pub fn parse_g13(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected `u v`, got `{line}`"),
                });
            }
            let mut ends = [0u64; 2];
            for (slot, p) in ends.iter_mut().zip(&parts) {
                *slot = p.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("`{p}` is not a nonnegative integer"),
                })?;
            }
            raw.push((ends[0], ends[1]));
        }
        let mut ids: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
        ids.sort_unstable();
        ids.dedup();
        let index: BTreeMap<u64, usize> = ids.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let edges = raw.iter().map(|(u, v)| (index[u], index[v])).collect();
        MultiGraph::new(ids.len(), edges)
    }

    pub fn to_g13(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// Edge slots at `v`: a loop is listed twice.
    pub fn incidence(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if a == v {
                out.push(e);
            }
            if b == v {
                out.push(e);
            }
        }
        out
    }

    pub fn incidences(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            inc[a].push(e);
            inc[b].push(e);
        }
        inc
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence(v).len()
    }

    /// Nodes of degree 3, in increasing order. These carry the `z`
    /// coordinates of `Q_G`.
    pub fn internal_nodes(&self) -> Vec<usize> {
        let deg = self.degrees();
        (0..self.n).filter(|&v| deg[v] == 3).collect()
    }

    pub fn leaves(&self) -> Vec<usize> {
        let deg = self.degrees();
        (0..self.n).filter(|&v| deg[v] == 1).collect()
    }

    /// Edges with at least one leaf endpoint.
    pub fn leaf_edges(&self) -> Vec<usize> {
        let deg = self.degrees();
        (0..self.m())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                deg[a] == 1 || deg[b] == 1
            })
            .collect()
    }

    /// Component label per node.
    pub fn components(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut label = BTreeMap::new();
        (0..self.n)
            .map(|v| {
                let r = find(&mut parent, v);
                let next = label.len();
                *label.entry(r).or_insert(next)
            })
            .collect()
    }

    pub fn stats(&self) -> GraphStats {
        let deg = self.degrees();
        let comp = self.components();
        let c = comp.iter().max().map_or(0, |&x| x + 1);
        let h = deg.iter().filter(|&&d| d == 1).count();
        let k = self.m() + c - self.n;
        GraphStats {
            n: self.n,
            m: self.m(),
            h,
            k,
            components: c,
            connected: c == 1,
            is_tree: c == 1 && k == 0,
            is_cubic: self.n > 0 && deg.iter().all(|&d| d == 3),
            one_three: deg.iter().all(|&d| d == 1 || d == 3),
        }
    }

    /// Returns the stats after checking that every degree is 1 or 3.
    pub fn require_one_three(&self) -> Result<GraphStats> {
        for (v, d) in self.degrees().into_iter().enumerate() {
            if d != 1 && d != 3 {
                return Err(Error::NotOneThree { node: v, degree: d });
            }
        }
        Ok(self.stats())
    }

    /// Edges of a shortest path from `s` to `t`, ignoring loops.
    pub fn path_edges(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let inc = self.incidences();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                let mut path = Vec::new();
                let mut y = t;
                while let Some((p, e)) = prev[y] {
                    path.push(e);
                    y = p;
                }
                path.reverse();
                return Some(path);
            }
            for &e in &inc[x] {
                let (a, b) = self.edges[e];
                let y = if a == x { b } else { a };
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")
    }
}

/// Validates the graph and reports its statistics. Degree violations are
/// reported through `GraphStats::one_three` rather than as an error.
pub fn validate_13(g: &MultiGraph) -> GraphStats {
    g.stats()
}

/// A set of edge IDs of a host graph with at most 64 edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSubset {
    bits: u64,
}

pub const MAX_SUBSET_EDGES: usize = 64;

impl EdgeSubset {
    pub fn empty() -> Self {
        EdgeSubset { bits: 0 }
    }

    pub fn from_bits(bits: u64) -> Self {
        EdgeSubset { bits }
    }

    pub fn from_edges(edges: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0;
        for e in edges {
            assert!(e < MAX_SUBSET_EDGES, "edge id {e} too large for EdgeSubset");
            bits |= 1u64 << e;
        }
        EdgeSubset { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_SUBSET_EDGES && self.bits >> e & 1 == 1
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_SUBSET_EDGES).filter(move |&e| self.bits >> e & 1 == 1)
    }

    pub fn symmetric_difference(self, other: EdgeSubset) -> EdgeSubset {
        EdgeSubset { bits: self.bits ^ other.bits }
    }

    /// True when every edge lies below `m`.
    pub fn fits(self, m: usize) -> bool {
        m >= MAX_SUBSET_EDGES || self.bits >> m == 0
    }

    /// 0/1 indicator vector of length `m`.
    pub fn indicator(self, m: usize) -> Vec<i64> {
        (0..m).map(|e| i64::from(self.contains(e))).collect()
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Degree of each node inside `h`, loops counted twice.
pub fn subset_degrees(g: &MultiGraph, h: EdgeSubset) -> Vec<usize> {
    let mut deg = vec![0; g.n()];
    for e in h.iter() {
        let (a, b) = g.endpoints(e);
        deg[a] += 1;
        deg[b] += 1;
    }
    deg
}

/// Degree 0 or 2 at every internal node of `g`.
pub fn is_internally_eulerian(g: &MultiGraph, h: EdgeSubset) -> bool {
    if !h.fits(g.m()) {
        return false;
    }
    let deg = subset_degrees(g, h);
    let gdeg = g.degrees();
    (0..g.n()).all(|v| gdeg[v] != 3 || deg[v] == 0 || deg[v] == 2)
}

/// Basis of the GF(2) kernel of the node/edge incidence matrix restricted to
/// the given rows.
fn parity_kernel(g: &MultiGraph, rows: &[usize]) -> Vec<u64> {
    let m = g.m();
    let mut mat: Vec<u64> = rows
        .iter()
        .map(|&v| {
            let mut r = 0u64;
            for e in g.incidence(v) {
                r ^= 1 << e;
            }
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m {
        let Some(p) = (row..mat.len()).find(|&r| mat[r] >> col & 1 == 1) else {
            continue;
        };
        mat.swap(row, p);
        for r in 0..mat.len() {
            if r != row && mat[r] >> col & 1 == 1 {
                mat[r] ^= mat[row];
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..m).filter(|c| !pivots.contains(c)) {
        let mut v = 1u64 << free;
        for (r, &pc) in pivots.iter().enumerate() {
            if mat[r] >> free & 1 == 1 {
                v |= 1 << pc;
            }
        }
        basis.push(v);
    }
    basis
}

fn span(basis: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64];
    for &b in basis {
        let extra: Vec<u64> = out.iter().map(|&x| x ^ b).collect();
        out.extend(extra);
    }
    out.sort_unstable();
    out
}

/// All internally Eulerian edge subsets, sorted by bit pattern (edge 0 is
/// the least significant bit).
pub fn enumerate_internally_eulerian(g: &MultiGraph) -> Result<Vec<EdgeSubset>> {
    g.require_one_three()?;
    if g.m() > MAX_SUBSET_EDGES {
        return Err(Error::TooLarge { what: "edge count", limit: MAX_SUBSET_EDGES });
    }
    let basis = parity_kernel(g, &g.internal_nodes());
    if basis.len() > 24 {
        return Err(Error::TooLarge { what: "cycle-space dimension", limit: 24 });
    }
    Ok(span(&basis).into_iter().map(EdgeSubset::from_bits).collect())
}

/// `2^k` when `h = 0`, otherwise `2^(k+h-1)`.
pub fn eulerian_count_formula(stats: &GraphStats) -> u128 {
    if stats.h == 0 {
        1u128 << stats.k
    } else {
        1u128 << (stats.k + stats.h - 1)
    }
}

/// Number of edge subsets in which every node has even degree.
pub fn count_eulerian_subgraphs(g: &MultiGraph) -> Result<u128> {
    if !g.stats().connected {
        return Err(Error::Disconnected);
    }
    if g.m() > MAX_SUBSET_EDGES {
        return Err(Error::TooLarge { what: "edge count", limit: MAX_SUBSET_EDGES });
    }
    let rows: Vec<usize> = (0..g.n()).collect();
    Ok(1u128 << parity_kernel(g, &rows).len())
}

/// The `(h,k)`-caterpillar `G_{h,k}`: `h` leaf legs and `k` loop legs hung
/// along a central path.
///
/// Numbering: for `h+k >= 3` the central path is nodes `0..h+k-2` from left
/// to right and leg `i` ends at node `h+k-2+i`. The two leftmost legs hang
/// from node 0, the two rightmost from the last path node, and leg `i` in
/// between from path node `i-1`. Loop legs come first (legs `0..k`), leaf
/// legs after. Edges: the `k` loops, then the leg edges in leg order, then
/// the central path edges left to right. With `h+k = 2` the two leg nodes
/// are joined directly.
pub fn caterpillar(h: usize, k: usize) -> Result<MultiGraph> {
    let legs = h + k;
    if legs < 2 {
        return Err(Error::InvalidShape { h, k });
    }
    let mut edges = Vec::new();
    if legs == 2 {
        for i in 0..k {
            edges.push((i, i));
        }
        edges.push((0, 1));
        return MultiGraph::new(2, edges);
    }
    let spine = legs - 2;
    let attach = |i: usize| {
        if i < 2 {
            0
        } else if i >= legs - 2 {
            spine - 1
        } else {
            i - 1
        }
    };
    for i in 0..k {
        edges.push((spine + i, spine + i));
    }
    for i in 0..legs {
        edges.push((attach(i), spine + i));
    }
    for s in 0..spine.saturating_sub(1) {
        edges.push((s, s + 1));
    }
    MultiGraph::new(spine + legs, edges)
}

/// Edge IDs of the loop legs of `G_{h,k}` in left-to-right order.
pub fn caterpillar_loops(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// Leaf nodes of `G_{h,k}` in left-to-right order.
pub fn caterpillar_leaves(h: usize, k: usize) -> Vec<usize> {
    let legs = h + k;
    if legs == 2 {
        return (k..2).collect();
    }
    let spine = legs - 2;
    (k..legs).map(|i| spine + i).collect()
}

/// Representative `H_{i,j}` in `G_{h,k}`: the first `j` loops together with
/// the `i` leaf-paths joining leaf legs `(0,1)`, `(2,3)`, ... .
pub fn caterpillar_coset(h: usize, k: usize, i: usize, j: usize) -> Result<EdgeSubset> {
    if 2 * i > h || j > k {
        return Err(Error::InvalidShape { h, k });
    }
    let g = caterpillar(h, k)?;
    let leaves = caterpillar_leaves(h, k);
    let mut edges: Vec<usize> = caterpillar_loops(k).into_iter().take(j).collect();
    for p in 0..i {
        let path = g
            .path_edges(leaves[2 * p], leaves[2 * p + 1])
            .expect("caterpillar is connected");
        edges.extend(path);
    }
    Ok(EdgeSubset::from_edges(edges))
}

/// Counts `(i, j)` for an internally Eulerian subset: `i` leaf-paths
/// (half the leaves it reaches) and `j` loops.
pub fn coset_shape(g: &MultiGraph, h: EdgeSubset) -> (usize, usize) {
    let deg = g.degrees();
    let leafy: usize = h
        .iter()
        .map(|e| {
            let (a, b) = g.endpoints(e);
            usize::from(deg[a] == 1) + usize::from(deg[b] == 1)
        })
        .sum();
    let loops = h.iter().filter(|&e| g.is_loop(e)).count();
    (leafy / 2, loops)
}

pub fn single_edge() -> MultiGraph {
    MultiGraph::new(2, vec![(0, 1)]).unwrap()
}

/// Two nodes, a loop at each, joined by one edge. Edge 0 is the loop at
/// node 0, edge 1 the loop at node 1, edge 2 the bridge.
pub fn dumbbell() -> MultiGraph {
    MultiGraph::new(2, vec![(0, 0), (1, 1), (0, 1)]).unwrap()
}

/// `K_{1,3}` with center 0.
pub fn star() -> MultiGraph {
    MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap()
}

/// Three parallel edges between two nodes.
pub fn theta() -> MultiGraph {
    MultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
}

pub fn k4() -> MultiGraph {
    MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn cube() -> MultiGraph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    MultiGraph::new(8, edges).unwrap()
}

pub fn cycle(n: usize) -> MultiGraph {
    MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
}

pub fn path(n: usize) -> MultiGraph {
    MultiGraph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
}

/// Size cap for [`are_isomorphic`].
pub const ISO_MAX_EDGES: usize = 16;

fn multiplicities(g: &MultiGraph) -> Vec<Vec<u8>> {
    let mut a = vec![vec![0u8; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        a[u][v] += 1;
        if u != v {
            a[v][u] += 1;
        }
    }
    a
}

/// Isomorphism invariant: sizes plus the sorted profile of
/// (degree, loops, sorted neighbour degrees) over nodes.
pub fn invariant(g: &MultiGraph) -> (usize, usize, Vec<(usize, u8, Vec<usize>)>) {
    let deg = g.degrees();
    let a = multiplicities(g);
    let mut prof: Vec<(usize, u8, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nb: Vec<usize> = Vec::new();
            for u in 0..g.n() {
                if u != v {
                    for _ in 0..a[v][u] {
                        nb.push(deg[u]);
                    }
                }
            }
            nb.sort_unstable();
            (deg[v], a[v][v], nb)
        })
        .collect();
    prof.sort();
    (g.n(), g.m(), prof)
}

/// Multigraph isomorphism by backtracking, for graphs with at most
/// [`ISO_MAX_EDGES`] edges.
pub fn are_isomorphic(g1: &MultiGraph, g2: &MultiGraph) -> Result<bool> {
    if g1.m() > ISO_MAX_EDGES || g2.m() > ISO_MAX_EDGES {
        return Err(Error::TooLarge { what: "edge count", limit: ISO_MAX_EDGES });
    }
    Ok(isomorphic(g1, g2))
}

pub(crate) fn isomorphic(g1: &MultiGraph, g2: &MultiGraph) -> bool {
    if invariant(g1) != invariant(g2) {
        return false;
    }
    let n = g1.n();
    let (a1, a2) = (multiplicities(g1), multiplicities(g2));
    let (d1, d2) = (g1.degrees(), g2.degrees());

    // Visit g1 in BFS order so each new node usually has a mapped neighbour.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            order.push(x);
            for y in 0..n {
                if !seen[y] && a1[x][y] > 0 {
                    seen[y] = true;
                    q.push_back(y);
                }
            }
        }
    }

    fn extend(
        pos: usize,
        order: &[usize],
        map: &mut [usize],
        used: &mut [bool],
        ctx: (&[Vec<u8>], &[Vec<u8>], &[usize], &[usize]),
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let (a1, a2, d1, d2) = ctx;
        let x = order[pos];
        for y in 0..used.len() {
            if used[y] || d1[x] != d2[y] || a1[x][x] != a2[y][y] {
                continue;
            }
            let ok = order[..pos].iter().all(|&p| a1[x][p] == a2[y][map[p]]);
            if !ok {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if extend(pos + 1, order, map, used, ctx) {
                return true;
            }
            used[y] = false;
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(0, &order, &mut map, &mut used, (&a1, &a2, &d1, &d2))
}

/// Relabels edges by a permutation: edge `e` of the result is edge
/// `perm[e]` of `g`.
pub fn permute_edges(g: &MultiGraph, perm: &[usize]) -> MultiGraph {
    MultiGraph::new(g.n(), perm.iter().map(|&e| g.endpoints(e)).collect()).unwrap()
}

/// Relabels nodes: node `v` of `g` becomes `perm[v]`.
pub fn permute_nodes(g: &MultiGraph, perm: &[usize]) -> MultiGraph {
    MultiGraph::new(g.n(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_internally_eulerian(g: &MultiGraph) -> Vec<EdgeSubset> {
        (0..1u64 << g.m())
            .map(EdgeSubset::from_bits)
            .filter(|&h| is_internally_eulerian(g, h))
            .collect()
    }

    fn brute_eulerian(g: &MultiGraph) -> u128 {
        (0..1u64 << g.m())
            .filter(|&b| subset_degrees(g, EdgeSubset::from_bits(b)).iter().all(|d| d % 2 == 0))
            .count() as u128
    }

    #[test]
    fn dumbbell_stats() {
        let s = validate_13(&dumbbell());
        assert_eq!((s.h, s.k, s.n, s.m), (0, 2, 2, 3));
        assert!(s.is_cubic && s.one_three && s.connected && !s.is_tree);
    }

    #[test]
    fn star_and_edge_stats() {
        let s = validate_13(&star());
        assert_eq!((s.h, s.k), (3, 0));
        assert!(s.is_tree && !s.is_cubic);
        let s = validate_13(&single_edge());
        assert_eq!((s.h, s.k), (2, 0));
        assert!(s.is_tree);
    }

    #[test]
    fn degree_violation_is_reported_not_raised() {
        let s = validate_13(&cycle(3));
        assert!(!s.one_three);
        assert!(MultiGraph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn dumbbell_eulerian_subsets() {
        let got = enumerate_internally_eulerian(&dumbbell()).unwrap();
        let want: Vec<EdgeSubset> = [vec![], vec![0], vec![1], vec![0, 1]]
            .into_iter()
            .map(EdgeSubset::from_edges)
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn star_eulerian_subsets_are_leaf_paths() {
        let got = enumerate_internally_eulerian(&star()).unwrap();
        let want: Vec<EdgeSubset> = [vec![], vec![0, 1], vec![0, 2], vec![1, 2]]
            .into_iter()
            .map(EdgeSubset::from_edges)
            .collect();
        assert_eq!(got, want);
        assert_eq!(enumerate_internally_eulerian(&single_edge()).unwrap().len(), 2);
    }

    #[test]
    fn eulerian_formula_values() {
        let st = |h, k| GraphStats {
            n: 0,
            m: 0,
            h,
            k,
            components: 1,
            connected: true,
            is_tree: false,
            is_cubic: false,
            one_three: true,
        };
        assert_eq!(eulerian_count_formula(&st(0, 2)), 4);
        assert_eq!(eulerian_count_formula(&st(2, 4)), 32);
        assert_eq!(eulerian_count_formula(&st(2, 0)), 2);
    }

    #[test]
    fn eulerian_subgraph_counts_match_brute_force() {
        for g in [dumbbell(), cycle(3), k4(), theta(), cube(), path(4)] {
            assert_eq!(count_eulerian_subgraphs(&g).unwrap(), brute_eulerian(&g), "{g}");
        }
        assert_eq!(count_eulerian_subgraphs(&k4()).unwrap(), 8);
        assert_eq!(count_eulerian_subgraphs(&cycle(3)).unwrap(), 2);
        let two = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(count_eulerian_subgraphs(&two), Err(Error::Disconnected));
    }

    #[test]
    fn caterpillar_shapes() {
        assert_eq!(caterpillar(0, 2).unwrap(), dumbbell());
        assert_eq!(caterpillar(2, 0).unwrap(), single_edge());
        assert!(caterpillar(1, 0).is_err());
        for h in 0..5 {
            for k in 0..5 {
                if h + k < 2 {
                    continue;
                }
                let g = caterpillar(h, k).unwrap();
                let s = g.require_one_three().unwrap();
                assert_eq!((s.h, s.k, s.n), (h, k, 2 * (h + k - 1)), "G_{h},{k}");
                assert!(s.connected);
                let subsets = enumerate_internally_eulerian(&g).unwrap();
                assert_eq!(subsets, brute_internally_eulerian(&g));
                assert_eq!(subsets.len() as u128, eulerian_count_formula(&s));
            }
        }
        let g = caterpillar(2, 4).unwrap();
        assert_eq!((g.n(), g.m()), (10, 13));
    }

    #[test]
    fn caterpillar_shape_counts_are_binomial() {
        fn binom(n: usize, r: usize) -> usize {
            if r > n {
                return 0;
            }
            (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for (h, k) in [(2, 2), (4, 1), (3, 2), (5, 0), (0, 3)] {
            let g = caterpillar(h, k).unwrap();
            let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            for s in enumerate_internally_eulerian(&g).unwrap() {
                *counts.entry(coset_shape(&g, s)).or_default() += 1;
            }
            for (&(i, j), &c) in &counts {
                assert!(2 * i <= h && j <= k);
                assert_eq!(c, binom(h, 2 * i) * binom(k, j), "G_{h},{k} shape ({i},{j})");
            }
        }
    }

    #[test]
    fn coset_representatives_have_their_shape() {
        for (h, k) in [(4, 1), (2, 2), (5, 0), (0, 3), (2, 0)] {
            let g = caterpillar(h, k).unwrap();
            for i in 0..=h / 2 {
                for j in 0..=k {
                    let s = caterpillar_coset(h, k, i, j).unwrap();
                    assert!(is_internally_eulerian(&g, s));
                    assert_eq!(coset_shape(&g, s), (i, j));
                }
            }
        }
    }

    #[test]
    fn isomorphism_cases() {
        assert!(are_isomorphic(&dumbbell(), &caterpillar(0, 2).unwrap()).unwrap());
        assert!(!are_isomorphic(&star(), &path(4)).unwrap());
        let g = caterpillar(2, 4).unwrap();
        let perm: Vec<usize> = (0..g.m()).rev().collect();
        let nodes: Vec<usize> = (0..g.n()).map(|v| (v * 3) % g.n()).collect();
        let h = permute_nodes(&permute_edges(&g, &perm), &nodes);
        assert!(are_isomorphic(&g, &h).unwrap());
        assert!(!are_isomorphic(&caterpillar(2, 4).unwrap(), &caterpillar(4, 3).unwrap()).unwrap());
        assert!(!are_isomorphic(&theta(), &dumbbell()).unwrap());
        let big = cycle(17);
        assert!(are_isomorphic(&big, &big).is_err());
    }

    #[test]
    fn g13_round_trip() {
        let text = "# dumbbell\n5 5\n\n7 7\n5 7\n";
        let g = MultiGraph::parse_g13(text).unwrap();
        assert_eq!(g, dumbbell());
        assert_eq!(MultiGraph::parse_g13(&g.to_g13()).unwrap(), g);
        assert!(matches!(MultiGraph::parse_g13("1 x\n"), Err(Error::Parse { line: 1, .. })));
    }
}
