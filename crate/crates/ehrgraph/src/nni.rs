//! Nearest-neighbour interchange on `{1,3}`-graphs and its action on
//! lattice points of `Q_G`.
//!
//! A trail `(a, e, b)` has pivot `e = uv`, with `a` meeting `u` and `b`
//! meeting `v`. The move detaches `a` from `u` and `b` from `v` and swaps
//! them, so afterwards `u` carries `b, c, e` and `v` carries `a, d, e`, where
//! `c` and `d` are the remaining edges at `u` and `v`. The edges need not be
//! distinct from one another apart from `a`, `b` and `e`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{half_sums, odd_set};
use crate::multigraph::{
    caterpillar, invariant, is_internally_eulerian, isomorphic, EdgeSubset, MultiGraph,
};
use crate::polytope::QPoint;

/// `side` selects which endpoint of the pivot is `u`: 0 for the smaller
/// node, 1 for the larger.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NniTrail {
    pub a: usize,
    pub e: usize,
    pub b: usize,
    pub side: usize,
}

impl NniTrail {
    pub fn new(a: usize, e: usize, b: usize, side: usize) -> Self {
        NniTrail { a, e, b, side }
    }

    /// The trail that undoes this move on the resulting graph.
    pub fn mirrored(self) -> Self {
        NniTrail { a: self.b, e: self.e, b: self.a, side: self.side }
    }
}

impl fmt::Display for NniTrail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nni {} {} {} {}", self.a, self.e, self.b, self.side)
    }
}

impl FromStr for NniTrail {
    type Err = Error;

    /// Accepts `nni a e b side` or just `a e b side`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts: Vec<&str> = s.split_whitespace().collect();
        if parts.first() == Some(&"nni") {
            parts.remove(0);
        }
        if parts.len() != 4 {
            return Err(Error::InvalidTrail(format!("expected `nni a e b side`, got `{s}`")));
        }
        let nums: Vec<usize> = parts
            .iter()
            .map(|p| p.parse().map_err(|_| Error::InvalidTrail(format!("`{p}` is not an index"))))
            .collect::<Result<_>>()?;
        if nums[3] > 1 {
            return Err(Error::InvalidTrail("side must be 0 or 1".into()));
        }
        Ok(NniTrail::new(nums[0], nums[1], nums[2], nums[3]))
    }
}

/// Pivot ends and the two edges that stay put.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub u: usize,
    pub v: usize,
    pub c: usize,
    pub d: usize,
}

fn remove_one(slots: &mut Vec<usize>, x: usize) -> bool {
    match slots.iter().position(|&y| y == x) {
        Some(i) => {
            slots.remove(i);
            true
        }
        None => false,
    }
}

pub fn resolve(g: &MultiGraph, trail: NniTrail) -> Result<Resolved> {
    let NniTrail { a, e, b, side } = trail;
    let m = g.m();
    if a >= m || e >= m || b >= m || side > 1 {
        return Err(Error::InvalidTrail(format!("{trail} references a missing edge")));
    }
    if a == e || b == e || a == b {
        return Err(Error::InvalidTrail(format!("{trail} repeats an edge")));
    }
    if g.is_loop(e) {
        return Err(Error::InvalidTrail("the pivot is a loop".into()));
    }
    let (p, q) = g.endpoints(e);
    let (u, v) = if side == 0 { (p, q) } else { (q, p) };
    let mut su = g.incidence(u);
    let mut sv = g.incidence(v);
    if su.len() != 3 || sv.len() != 3 {
        return Err(Error::InvalidTrail("both pivot ends must be internal nodes".into()));
    }
    remove_one(&mut su, e);
    remove_one(&mut sv, e);
    if !remove_one(&mut su, a) {
        return Err(Error::InvalidTrail(format!("edge {a} does not meet node {u}")));
    }
    if !remove_one(&mut sv, b) {
        return Err(Error::InvalidTrail(format!("edge {b} does not meet node {v}")));
    }
    Ok(Resolved { u, v, c: su[0], d: sv[0] })
}

fn reattach(ends: (usize, usize), from: usize, to: usize) -> (usize, usize) {
    if ends.0 == from {
        (to, ends.1)
    } else {
        (ends.0, to)
    }
}

/// The graph after the move. Node and edge IDs are unchanged.
pub fn apply_nni(g: &MultiGraph, trail: NniTrail) -> Result<MultiGraph> {
    let r = resolve(g, trail)?;
    let mut edges = g.edges().to_vec();
    edges[trail.a] = reattach(edges[trail.a], r.u, r.v);
    edges[trail.b] = reattach(edges[trail.b], r.v, r.u);
    MultiGraph::new(g.n(), edges)
}

/// Checks that `point` is an integer point of some dilation of `Q_G`.
pub fn in_some_q(g: &MultiGraph, point: &QPoint) -> bool {
    if point.w.len() != g.m() || point.w.iter().any(|&x| x < 0) {
        return false;
    }
    let internal = g.internal_nodes();
    if point.z.len() != internal.len() {
        return false;
    }
    internal.iter().zip(&point.z).all(|(&v, &z)| {
        let tr = g.incidence(v);
        let ws = [point.w[tr[0]], point.w[tr[1]], point.w[tr[2]]];
        let s: i64 = ws.iter().sum();
        s == 2 * z && ws.iter().all(|&x| 2 * x <= s)
    })
}

/// Transports a point of `tQ_G` to `tQ_{G'}`: only the pivot weight changes,
/// by `max(w_a+w_c, w_b+w_d) - max(w_b+w_c, w_a+w_d)`, and the node values
/// are recomputed as half-sums.
pub fn weighted_nni(g: &MultiGraph, trail: NniTrail, point: &QPoint) -> Result<QPoint> {
    let r = resolve(g, trail)?;
    if !in_some_q(g, point) {
        return Err(Error::PointNotInQ);
    }
    let g2 = apply_nni(g, trail)?;
    let w = &point.w;
    let (a, b, c, d, e) = (trail.a, trail.b, r.c, r.d, trail.e);
    let mut w2 = w.clone();
    w2[e] = w[e] + (w[a] + w[c]).max(w[b] + w[d]) - (w[b] + w[c]).max(w[a] + w[d]);
    let z2 = half_sums(&g2, &w2);
    Ok(QPoint { w: w2, z: z2 })
}

/// `H'` paired with `H` by the move: the odd edges of the image of the
/// witness point `(1_H, half-sums)`.
pub fn induced_eulerian(g: &MultiGraph, trail: NniTrail, h: EdgeSubset) -> Result<EdgeSubset> {
    if !is_internally_eulerian(g, h) {
        return Err(Error::NotEulerian);
    }
    let w = h.indicator(g.m());
    let z = half_sums(g, &w);
    let image = weighted_nni(g, trail, &QPoint { w, z })?;
    Ok(odd_set(&image.w))
}

/// Every available move, with `u` the smaller pivot end (the other side
/// gives the same moves with `a` and `b` exchanged).
pub fn nni_moves(g: &MultiGraph) -> Vec<NniTrail> {
    let deg = g.degrees();
    let mut out = Vec::new();
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        if u == v || deg[u] != 3 || deg[v] != 3 {
            continue;
        }
        let mut at_u = g.incidence(u);
        let mut at_v = g.incidence(v);
        remove_one(&mut at_u, e);
        remove_one(&mut at_v, e);
        at_u.dedup();
        at_v.dedup();
        for &a in &at_u {
            for &b in &at_v {
                if a != b {
                    out.push(NniTrail::new(a, e, b, 0));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Size cap for [`nni_neighbors`] and the exhaustive search in
/// [`canonicalize`].
pub const NNI_SEARCH_MAX_EDGES: usize = 12;

pub fn nni_neighbors(g: &MultiGraph) -> Result<Vec<MultiGraph>> {
    if g.m() > NNI_SEARCH_MAX_EDGES {
        return Err(Error::TooLarge { what: "edge count", limit: NNI_SEARCH_MAX_EDGES });
    }
    nni_moves(g).into_iter().map(|t| apply_nni(g, t)).collect()
}

/// Distance of `g` from caterpillar shape; zero on every `G_{h,k}`.
///
/// Counts cycles that are not loops, branching in the core left after
/// removing leaves and loop-carrying nodes, and extra alternations between
/// loop legs and leaf legs along the core path.
pub fn caterpillar_defect(g: &MultiGraph) -> usize {
    let stats = g.stats();
    let loops = (0..g.m()).filter(|&e| g.is_loop(e)).count();
    let cycles = stats.k.saturating_sub(loops);

    let deg = g.degrees();
    let has_loop: Vec<bool> = {
        let mut v = vec![false; g.n()];
        for e in 0..g.m() {
            if g.is_loop(e) {
                v[g.endpoints(e).0] = true;
            }
        }
        v
    };
    let is_leg = |x: usize| deg[x] == 1 || has_loop[x];
    let core: Vec<usize> = (0..g.n()).filter(|&x| !is_leg(x)).collect();
    let mut core_deg = vec![0usize; g.n()];
    let mut core_edges = Vec::new();
    for &(p, q) in g.edges() {
        if p != q && !is_leg(p) && !is_leg(q) {
            core_deg[p] += 1;
            core_deg[q] += 1;
            core_edges.push((p, q));
        }
    }
    let branching: usize = core.iter().map(|&x| core_deg[x].saturating_sub(2)).sum();

    let mut alternations = 0;
    if branching == 0 && cycles == 0 && core.len() > 1 {
        // Walk the core path from one end.
        let start = core.iter().copied().find(|&x| core_deg[x] <= 1).unwrap_or(core[0]);
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = core_edges
                .iter()
                .filter_map(|&(p, q)| if p == cur { Some(q) } else if q == cur { Some(p) } else { None })
                .find(|&y| y != prev && !order.contains(&y));
            match next {
                Some(y) => {
                    prev = cur;
                    cur = y;
                    order.push(y);
                }
                None => break,
            }
        }
        let leg_types = |x: usize| -> Vec<bool> {
            g.incidence(x)
                .into_iter()
                .filter_map(|e| {
                    let (p, q) = g.endpoints(e);
                    let y = if p == x { q } else { p };
                    (y != x && is_leg(y)).then_some(has_loop[y])
                })
                .collect()
        };
        let mut seq: Vec<bool> = Vec::new();
        let last = order.len() - 1;
        for (i, &x) in order.iter().enumerate() {
            let mut types = leg_types(x);
            if i == 0 {
                let next_type = leg_types(order[1]).first().copied();
                types.sort_by_key(|&ty| Some(ty) == next_type);
            } else if i == last {
                let prev_type = seq.last().copied();
                types.sort_by_key(|&ty| Some(ty) != prev_type);
            }
            seq.extend(types);
        }
        let switches = seq.windows(2).filter(|w| w[0] != w[1]).count();
        alternations = switches.saturating_sub(1);
    }
    100 * cycles + 10 * branching + alternations
}

/// NNI moves taking `g` to a graph isomorphic to `G_{h,k}`.
///
/// Greedy descent on [`caterpillar_defect`] first; if that stalls, a
/// breadth-first search over NNI neighbours (graphs up to
/// [`NNI_SEARCH_MAX_EDGES`] edges, ties broken by trail order).
pub fn canonicalize(g: &MultiGraph) -> Result<(MultiGraph, Vec<NniTrail>)> {
    let stats = g.require_one_three()?;
    if !stats.connected {
        return Err(Error::Disconnected);
    }
    let target = caterpillar(stats.h, stats.k)?;
    if let Some(found) = greedy(g, &target) {
        return Ok(found);
    }
    if g.m() > NNI_SEARCH_MAX_EDGES {
        return Err(Error::CanonicalizationFailed);
    }
    bfs(g, &target).ok_or(Error::CanonicalizationFailed)
}

fn greedy(g: &MultiGraph, target: &MultiGraph) -> Option<(MultiGraph, Vec<NniTrail>)> {
    let mut cur = g.clone();
    let mut moves = Vec::new();
    let mut score = caterpillar_defect(&cur);
    loop {
        if isomorphic(&cur, target) {
            return Some((cur, moves));
        }
        let best = nni_moves(&cur)
            .into_iter()
            .map(|t| {
                let next = apply_nni(&cur, t).expect("listed moves are valid");
                (caterpillar_defect(&next), t, next)
            })
            .min_by_key(|(s, t, _)| (*s, *t))?;
        if best.0 >= score {
            return None;
        }
        score = best.0;
        moves.push(best.1);
        cur = best.2;
    }
}

fn bfs(g: &MultiGraph, target: &MultiGraph) -> Option<(MultiGraph, Vec<NniTrail>)> {
    type Key = (usize, usize, Vec<(usize, u8, Vec<usize>)>);
    let mut seen: HashMap<Key, Vec<MultiGraph>> = HashMap::new();
    let mut queue: VecDeque<(MultiGraph, Vec<NniTrail>)> = VecDeque::new();
    seen.entry(invariant(g)).or_default().push(g.clone());
    queue.push_back((g.clone(), Vec::new()));
    while let Some((cur, path)) = queue.pop_front() {
        if isomorphic(&cur, target) {
            return Some((cur, path));
        }
        for t in nni_moves(&cur) {
            let next = apply_nni(&cur, t).expect("listed moves are valid");
            let bucket = seen.entry(invariant(&next)).or_default();
            if bucket.iter().any(|h| isomorphic(h, &next)) {
                continue;
            }
            bucket.push(next.clone());
            let mut p = path.clone();
            p.push(t);
            queue.push_back((next, p));
        }
    }
    None
}

/// Replays a move list, one `nni a e b side` per line.
pub fn replay(g: &MultiGraph, moves: &str) -> Result<MultiGraph> {
    let mut cur = g.clone();
    for line in moves.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        cur = apply_nni(&cur, line.parse()?)?;
    }
    Ok(cur)
}
