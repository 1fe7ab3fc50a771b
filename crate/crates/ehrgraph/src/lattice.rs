//! Exact lattice-point enumeration and counting in `tP_G` and `tQ_G`.
//!
//! Both polytopes are handled in edge-weight space. A weight vector `w` is in
//! `tP_G` when every internal node triple satisfies the triangle
//! inequalities and has sum at most `t`; it is the edge part of a point of
//! `tQ_G` when the triples satisfy the triangle inequalities, have even sum
//! and sum at most `2t` (the node values are the half-sums). An edge that is
//! a component by itself is bounded by `2w <= t` in `P` and `w <= t` in `Q`.
//! Writing `B = t` for `P` and `B = 2t` for `Q` gives one engine for both.
//!
//! Three counters are provided: a depth-first enumerator in edge order
//! ([`Enumerator`]), a variable-elimination counter over node factors
//! ([`count`], used for large dilations), and a leaf-rooted dynamic program
//! for trees ([`tree_dp_count`]).

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::multigraph::{is_internally_eulerian, EdgeSubset, MultiGraph};
use crate::polytope::{isolated_edges, PPoint, Polytope, QPoint};

/// Visited-node budget when `EHRGRAPH_BUDGET` is unset.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest edge count accepted by the point-materialising enumerators.
pub const ENUM_MAX_EDGES: usize = 10;

pub fn default_budget() -> u64 {
    std::env::var("EHRGRAPH_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn perimeter_bound(polytope: Polytope, t: u64) -> i64 {
    let t = t as i64;
    match polytope {
        Polytope::P => t,
        Polytope::Q => 2 * t,
    }
}

fn triple_ok(v: [i64; 3], bound: i64, even: bool) -> bool {
    let s = v[0] + v[1] + v[2];
    v.iter().all(|&x| x >= 0 && 2 * x <= s) && s <= bound && (!even || s % 2 == 0)
}

/// Integer membership of an edge-weight vector, without going through the
/// linear system.
pub fn member(g: &MultiGraph, polytope: Polytope, t: u64, w: &[i64]) -> bool {
    if w.len() != g.m() || w.iter().any(|&x| x < 0) {
        return false;
    }
    let bound = perimeter_bound(polytope, t);
    let even = polytope == Polytope::Q;
    for v in g.internal_nodes() {
        let tr = g.incidence(v);
        if !triple_ok([w[tr[0]], w[tr[1]], w[tr[2]]], bound, even) {
            return false;
        }
    }
    isolated_edges(g).into_iter().all(|e| 2 * w[e] <= bound)
}

/// Node values `z_v = (sum of incident weights)/2` over internal nodes.
pub fn half_sums(g: &MultiGraph, w: &[i64]) -> Vec<i64> {
    g.internal_nodes()
        .into_iter()
        .map(|v| g.incidence(v).iter().map(|&e| w[e]).sum::<i64>() / 2)
        .collect()
}

pub fn odd_set(w: &[i64]) -> EdgeSubset {
    EdgeSubset::from_edges((0..w.len()).filter(|&e| w[e].rem_euclid(2) == 1))
}

#[derive(Clone, Copy, Debug)]
enum Local {
    /// Three distinct edges at a node.
    Triple([usize; 3]),
    /// A loop `l` (counted twice) and the other edge `c`.
    Loop { l: usize, c: usize },
}

fn locals(g: &MultiGraph) -> Vec<Local> {
    g.internal_nodes()
        .into_iter()
        .map(|v| {
            let tr = g.incidence(v);
            if tr[0] == tr[1] {
                Local::Loop { l: tr[0], c: tr[2] }
            } else if tr[1] == tr[2] {
                Local::Loop { l: tr[1], c: tr[0] }
            } else if tr[0] == tr[2] {
                Local::Loop { l: tr[0], c: tr[1] }
            } else {
                Local::Triple([tr[0], tr[1], tr[2]])
            }
        })
        .collect()
}

/// Depth-first enumeration of lattice points, assigning edges in ID order.
///
/// Before an edge is assigned, every node it meets narrows its range: once
/// the other two weights of a triple are fixed the triangle and perimeter
/// rows leave a closed interval, and partial assignments still cap it. The
/// visiting order is lexicographic in `w`.
pub struct Enumerator<'g> {
    g: &'g MultiGraph,
    polytope: Polytope,
    bound: i64,
    parity: Vec<Option<bool>>,
    budget: u64,
    max_edges: usize,
    at_edge: Vec<Vec<Local>>,
}

impl<'g> Enumerator<'g> {
    pub fn new(g: &'g MultiGraph, polytope: Polytope, t: u64) -> Result<Self> {
        g.require_one_three()?;
        let mut at_edge = vec![Vec::new(); g.m()];
        for local in locals(g) {
            let edges: Vec<usize> = match local {
                Local::Triple(tr) => tr.to_vec(),
                Local::Loop { l, c } => vec![l, c],
            };
            for e in edges {
                at_edge[e].push(local);
            }
        }
        Ok(Enumerator {
            g,
            polytope,
            bound: perimeter_bound(polytope, t),
            parity: vec![None; g.m()],
            budget: default_budget(),
            max_edges: usize::MAX,
            at_edge,
        })
    }

    /// Restricts edge `e` to odd (`true`) or even (`false`) weights.
    pub fn parity(mut self, e: usize, odd: bool) -> Self {
        self.parity[e] = Some(odd);
        self
    }

    /// Restricts every edge: odd exactly on `h`.
    pub fn coset(mut self, h: EdgeSubset) -> Self {
        for e in 0..self.g.m() {
            self.parity[e] = Some(h.contains(e));
        }
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn max_edges(mut self, cap: usize) -> Self {
        self.max_edges = cap;
        self
    }

    /// Range and forced parity for edge `x` given `w[..x]`. `None` when
    /// empty.
    fn range(&self, x: usize, w: &[i64]) -> Option<(i64, i64, Option<i64>)> {
        let b = self.bound;
        let q = self.polytope == Polytope::Q;
        let (mut lo, mut hi) = (0i64, b / 2);
        let mut par: Option<i64> = self.parity[x].map(i64::from);
        let force = |p: i64, par: &mut Option<i64>| -> bool {
            match *par {
                Some(old) if old != p => false,
                _ => {
                    *par = Some(p);
                    true
                }
            }
        };
        for local in &self.at_edge[x] {
            match *local {
                Local::Triple(tr) => {
                    let others: Vec<usize> = tr.iter().copied().filter(|&e| e != x).collect();
                    let known: Vec<i64> = others.iter().filter(|&&e| e < x).map(|&e| w[e]).collect();
                    match known.len() {
                        2 => {
                            let (y, z) = (known[0], known[1]);
                            lo = lo.max((y - z).abs());
                            hi = hi.min((y + z).min(b - y - z));
                            if q && !force((y + z).rem_euclid(2), &mut par) {
                                return None;
                            }
                        }
                        1 => hi = hi.min(b - known[0]),
                        _ => {}
                    }
                }
                Local::Loop { l, c } => {
                    if x == l {
                        if c < x {
                            let cv = w[c];
                            if q && cv % 2 != 0 {
                                return None;
                            }
                            lo = lo.max((cv + 1) / 2);
                            hi = hi.min((b - cv).div_euclid(2));
                        }
                    } else if l < x {
                        let a = w[l];
                        hi = hi.min((2 * a).min(b - 2 * a));
                        if q && !force(0, &mut par) {
                            return None;
                        }
                    } else if q && !force(0, &mut par) {
                        return None;
                    }
                }
            }
        }
        if let Some(p) = par {
            if lo.rem_euclid(2) != p {
                lo += 1;
            }
        }
        if lo > hi {
            return None;
        }
        Some((lo, hi, par))
    }

    fn check_cap(&self) -> Result<()> {
        if self.g.m() > self.max_edges {
            return Err(Error::TooLarge { what: "edge count", limit: self.max_edges });
        }
        Ok(())
    }

    /// Calls `f` on every point in lexicographic order.
    pub fn for_each(&self, mut f: impl FnMut(&[i64])) -> Result<u64> {
        self.check_cap()?;
        let m = self.g.m();
        let mut w = vec![0i64; m];
        let mut visited = 0u64;
        let mut found = 0u64;
        self.walk(0, &mut w, &mut visited, &mut |w| {
            found += 1;
            f(w)
        })?;
        Ok(found)
    }

    fn walk(&self, x: usize, w: &mut Vec<i64>, visited: &mut u64, f: &mut dyn FnMut(&[i64])) -> Result<()> {
        if x == w.len() {
            f(w);
            return Ok(());
        }
        let Some((lo, hi, par)) = self.range(x, w) else {
            return Ok(());
        };
        let step = if par.is_some() { 2 } else { 1 };
        let mut v = lo;
        while v <= hi {
            *visited += 1;
            if *visited > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            w[x] = v;
            self.walk(x + 1, w, visited, f)?;
            v += step;
        }
        Ok(())
    }

    /// Number of points; the last edge is counted without being visited.
    pub fn count(&self) -> Result<u128> {
        let m = self.g.m();
        if m == 0 {
            return Ok(1);
        }
        let mut w = vec![0i64; m];
        let mut visited = 0u64;
        self.count_from(0, &mut w, &mut visited)
    }

    fn count_from(&self, x: usize, w: &mut Vec<i64>, visited: &mut u64) -> Result<u128> {
        let Some((lo, hi, par)) = self.range(x, w) else {
            return Ok(0);
        };
        let step = if par.is_some() { 2 } else { 1 };
        if x + 1 == w.len() {
            return Ok(((hi - lo) / step + 1) as u128);
        }
        let mut total = 0u128;
        let mut v = lo;
        while v <= hi {
            *visited += 1;
            if *visited > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            w[x] = v;
            total += self.count_from(x + 1, w, visited)?;
            v += step;
        }
        Ok(total)
    }
}

/// Integer points of `tP_G`, lexicographic.
pub fn enumerate_p_points(g: &MultiGraph, t: u64) -> Result<Vec<PPoint>> {
    let mut out = Vec::new();
    Enumerator::new(g, Polytope::P, t)?
        .max_edges(ENUM_MAX_EDGES)
        .for_each(|w| out.push(PPoint { w: w.to_vec() }))?;
    Ok(out)
}

/// Integer points of `tQ_G`, lexicographic in `w`.
pub fn enumerate_q_points(g: &MultiGraph, t: u64) -> Result<Vec<QPoint>> {
    let mut out = Vec::new();
    Enumerator::new(g, Polytope::Q, t)?
        .max_edges(ENUM_MAX_EDGES)
        .for_each(|w| out.push(QPoint { w: w.to_vec(), z: half_sums(g, w) }))?;
    Ok(out)
}

/// Points of `part_t(G,H)`: points of `tQ_G` whose weights are odd exactly
/// on `H`.
pub fn coset_points(g: &MultiGraph, h: EdgeSubset, t: u64) -> Result<Vec<QPoint>> {
    require_eulerian(g, h)?;
    let mut out = Vec::new();
    Enumerator::new(g, Polytope::Q, t)?
        .max_edges(ENUM_MAX_EDGES)
        .coset(h)
        .for_each(|w| out.push(QPoint { w: w.to_vec(), z: half_sums(g, w) }))?;
    Ok(out)
}

/// Depth-first point count.
pub fn dfs_count(g: &MultiGraph, polytope: Polytope, t: u64) -> Result<u128> {
    Enumerator::new(g, polytope, t)?.count()
}

/// A table over the edges in `scope`, last edge varying fastest.
struct Factor {
    scope: Vec<usize>,
    data: Vec<u128>,
}

/// Counts points with optional per-edge parity restrictions by summing out
/// edges one at a time (smallest resulting table first).
pub fn count_restricted(
    g: &MultiGraph,
    polytope: Polytope,
    t: u64,
    parity: &[Option<bool>],
    budget: u64,
) -> Result<u128> {
    g.require_one_three()?;
    let m = g.m();
    let bound = perimeter_bound(polytope, t);
    let d = (bound / 2 + 1) as usize;
    let even = polytope == Polytope::Q;
    let mut factors: Vec<Factor> = Vec::new();

    for v in g.internal_nodes() {
        let tr = g.incidence(v);
        let mut scope = tr.clone();
        scope.sort_unstable();
        scope.dedup();
        let size = d.pow(scope.len() as u32);
        let mut data = vec![0u128; size];
        let mut vals = vec![0i64; scope.len()];
        for (idx, cell) in data.iter_mut().enumerate() {
            let mut r = idx;
            for slot in vals.iter_mut().rev() {
                *slot = (r % d) as i64;
                r /= d;
            }
            let val = |e: usize| vals[scope.iter().position(|&s| s == e).unwrap()];
            if triple_ok([val(tr[0]), val(tr[1]), val(tr[2])], bound, even) {
                *cell = 1;
            }
        }
        factors.push(Factor { scope, data });
    }
    for (e, par) in parity.iter().enumerate().take(m) {
        if let Some(odd) = *par {
            let data = (0..d).map(|x| u128::from((x % 2 == 1) == odd)).collect();
            factors.push(Factor { scope: vec![e], data });
        }
    }
    let mut covered = vec![false; m];
    for f in &factors {
        for &e in &f.scope {
            covered[e] = true;
        }
    }
    for e in isolated_edges(g) {
        let data = (0..d).map(|x| u128::from(2 * x as i64 <= bound)).collect();
        factors.push(Factor { scope: vec![e], data });
        covered[e] = true;
    }
    debug_assert!(covered.iter().all(|&c| c), "every edge meets a node or is isolated");

    let mut work = 0u64;
    let mut remaining: Vec<usize> = (0..m).collect();
    while !remaining.is_empty() {
        let (pos, x) = remaining
            .iter()
            .enumerate()
            .min_by_key(|&(_, &x)| {
                let mut u: Vec<usize> = factors
                    .iter()
                    .filter(|f| f.scope.contains(&x))
                    .flat_map(|f| f.scope.iter().copied())
                    .collect();
                u.sort_unstable();
                u.dedup();
                (u.len(), x)
            })
            .map(|(p, &x)| (p, x))
            .unwrap();
        remaining.remove(pos);
        let (with, without): (Vec<Factor>, Vec<Factor>) =
            factors.into_iter().partition(|f| f.scope.contains(&x));
        factors = without;
        let mut scope: Vec<usize> = with.iter().flat_map(|f| f.scope.iter().copied()).filter(|&e| e != x).collect();
        scope.sort_unstable();
        scope.dedup();
        let full: Vec<usize> = scope.iter().copied().chain([x]).collect();
        let cells = d.checked_pow(full.len() as u32).ok_or(Error::BudgetExceeded { budget })?;
        work = work.saturating_add(cells as u64);
        if work > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let maps: Vec<Vec<(usize, usize)>> = with
            .iter()
            .map(|f| {
                let k = f.scope.len();
                f.scope
                    .iter()
                    .enumerate()
                    .map(|(i, e)| (full.iter().position(|s| s == e).unwrap(), d.pow((k - 1 - i) as u32)))
                    .collect()
            })
            .collect();
        let mut out = vec![0u128; cells / d];
        let mut vals = vec![0usize; full.len()];
        for idx in 0..cells {
            let mut r = idx;
            for slot in vals.iter_mut().rev() {
                *slot = r % d;
                r /= d;
            }
            let mut prod = 1u128;
            for (f, map) in with.iter().zip(&maps) {
                let i: usize = map.iter().map(|&(p, s)| vals[p] * s).sum();
                prod = prod.checked_mul(f.data[i]).ok_or(Error::Overflow)?;
                if prod == 0 {
                    break;
                }
            }
            if prod != 0 {
                let o = &mut out[idx / d];
                *o = o.checked_add(prod).ok_or(Error::Overflow)?;
            }
        }
        factors.push(Factor { scope, data: out });
    }
    let mut total = 1u128;
    for f in factors {
        debug_assert!(f.scope.is_empty());
        total = total.checked_mul(f.data[0]).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// `L^P_G(t)` or `L^Q_G(t)`.
pub fn count(g: &MultiGraph, polytope: Polytope, t: u64) -> Result<u128> {
    count_restricted(g, polytope, t, &[], default_budget())
}

pub fn count_p(g: &MultiGraph, t: u64) -> Result<u128> {
    count(g, Polytope::P, t)
}

/// Points of `tQ_G`; the node values are implied by `w` and never
/// enumerated.
pub fn count_q(g: &MultiGraph, t: u64) -> Result<u128> {
    count(g, Polytope::Q, t)
}

fn require_eulerian(g: &MultiGraph, h: EdgeSubset) -> Result<()> {
    g.require_one_three()?;
    if !is_internally_eulerian(g, h) {
        return Err(Error::NotEulerian);
    }
    Ok(())
}

/// `vol_t(G,H)`: the number of points of `tQ_G` whose weights are odd
/// exactly on `H`.
pub fn vol_coset(g: &MultiGraph, h: EdgeSubset, t: u64) -> Result<u128> {
    require_eulerian(g, h)?;
    let parity: Vec<Option<bool>> = (0..g.m()).map(|e| Some(h.contains(e))).collect();
    count_restricted(g, Polytope::Q, t, &parity, default_budget())
}

/// Points with even and with odd weight on edge `e`.
pub fn parity_counts(g: &MultiGraph, t: u64, e: usize, polytope: Polytope) -> Result<(u128, u128)> {
    if e >= g.m() {
        return Err(Error::DimensionMismatch { expected: g.m(), got: e + 1 });
    }
    let mut parity = vec![None; g.m()];
    parity[e] = Some(false);
    let even = count_restricted(g, polytope, t, &parity, default_budget())?;
    parity[e] = Some(true);
    let odd = count_restricted(g, polytope, t, &parity, default_budget())?;
    Ok((even, odd))
}

/// `Out_e`: points of `tP_G` with even `w_e` whose `+1_e` shift leaves the
/// polytope. `In_e`: points with odd `w_e` whose `-1_e` shift leaves it.
pub fn out_in_sets(g: &MultiGraph, t: u64, e: usize) -> Result<(Vec<PPoint>, Vec<PPoint>)> {
    if e >= g.m() {
        return Err(Error::DimensionMismatch { expected: g.m(), got: e + 1 });
    }
    let points = enumerate_p_points(g, t)?;
    let (mut outs, mut ins) = (Vec::new(), Vec::new());
    for p in points {
        let mut shifted = p.w.clone();
        if p.w[e] % 2 == 0 {
            shifted[e] += 1;
            if !member(g, Polytope::P, t, &shifted) {
                outs.push(p);
            }
        } else {
            shifted[e] -= 1;
            if !member(g, Polytope::P, t, &shifted) {
                ins.push(p);
            }
        }
    }
    Ok((outs, ins))
}

/// Point count for a `{1,3}`-tree by dynamic programming from a leaf: for
/// each edge, the number of ways to weight the subtree below it given its
/// own weight.
pub fn tree_dp_count(g: &MultiGraph, t: u64, polytope: Polytope) -> Result<u128> {
    let stats = g.require_one_three()?;
    if !stats.is_tree {
        return Err(Error::NotTree);
    }
    let bound = perimeter_bound(polytope, t);
    let d = (bound / 2 + 1) as usize;
    if g.m() == 1 {
        return Ok(d as u128);
    }
    let q = polytope == Polytope::Q;
    let inc = g.incidences();
    let root = g.leaves()[0];
    let root_edge = inc[root][0];

    // Post-order over (edge, node below it).
    let mut order = Vec::new();
    let mut stack = vec![(root_edge, other_end(g, root_edge, root))];
    let mut seen = HashSet::new();
    while let Some((e, v)) = stack.pop() {
        order.push((e, v));
        seen.insert(e);
        for &f in &inc[v] {
            if !seen.contains(&f) {
                stack.push((f, other_end(g, f, v)));
            }
        }
    }
    let mut table: Vec<Vec<u128>> = vec![Vec::new(); g.m()];
    for &(e, v) in order.iter().rev() {
        let children: Vec<usize> = inc[v].iter().copied().filter(|&f| f != e).collect();
        if children.is_empty() {
            table[e] = vec![1; d];
            continue;
        }
        let (fb, fc) = (&table[children[0]], &table[children[1]]);
        // prefix[p][i] = sum of fc[z] for z < i with z % 2 == p
        let mut prefix = vec![vec![0u128; d + 1]; 2];
        for z in 0..d {
            for p in 0..2 {
                let add = if z % 2 == p { fc[z] } else { 0 };
                prefix[p][z + 1] = prefix[p][z].checked_add(add).ok_or(Error::Overflow)?;
            }
        }
        let mut out = vec![0u128; d];
        for x in 0..d as i64 {
            let mut acc = 0u128;
            for y in 0..d as i64 {
                if fb[y as usize] == 0 {
                    continue;
                }
                let lo = (x - y).abs();
                let hi = (x + y).min(bound - x - y).min(d as i64 - 1);
                if lo > hi {
                    continue;
                }
                let (lo, hi) = (lo as usize, hi as usize);
                let s = if q {
                    let p = ((x + y) % 2) as usize;
                    prefix[p][hi + 1] - prefix[p][lo]
                } else {
                    (prefix[0][hi + 1] - prefix[0][lo]) + (prefix[1][hi + 1] - prefix[1][lo])
                };
                acc = acc
                    .checked_add(fb[y as usize].checked_mul(s).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
            }
            out[x as usize] = acc;
        }
        table[e] = out;
    }
    table[root_edge].iter().try_fold(0u128, |a, &x| a.checked_add(x).ok_or(Error::Overflow))
}

fn other_end(g: &MultiGraph, e: usize, v: usize) -> usize {
    let (a, b) = g.endpoints(e);
    if a == v {
        b
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{caterpillar, dumbbell, enumerate_internally_eulerian, k4, single_edge, star, theta};
    use crate::polytope::build_system;

    /// Brute force over the box `[0, t]^m` through the linear system.
    fn box_count(g: &MultiGraph, polytope: Polytope, t: u64) -> u128 {
        let sys = build_system(g, polytope).unwrap();
        let m = g.m();
        let mut w = vec![0i64; m];
        let mut n = 0;
        loop {
            let mut coords = w.clone();
            if polytope == Polytope::Q {
                let z = half_sums(g, &w);
                let exact = g
                    .internal_nodes()
                    .iter()
                    .all(|&v| g.incidence(v).iter().map(|&e| w[e]).sum::<i64>() % 2 == 0);
                if !exact {
                    if !advance(&mut w, t as i64) {
                        break;
                    }
                    continue;
                }
                coords.extend(z);
            }
            if sys.contains(t as i64, &coords).unwrap() {
                n += 1;
            }
            if !advance(&mut w, t as i64) {
                break;
            }
        }
        n
    }

    fn advance(w: &mut [i64], t: i64) -> bool {
        for x in w.iter_mut().rev() {
            if *x < t {
                *x += 1;
                return true;
            }
            *x = 0;
        }
        false
    }

    #[test]
    fn dumbbell_values() {
        let g = dumbbell();
        assert_eq!(enumerate_p_points(&g, 1).unwrap(), vec![PPoint { w: vec![0, 0, 0] }]);
        assert_eq!(enumerate_p_points(&g, 2).unwrap().len(), 4);
        assert_eq!(count_q(&g, 1).unwrap(), 4);
        assert_eq!(count_q(&g, 2).unwrap(), 10);
        assert_eq!(count_p(&g, 4).unwrap(), 11);
    }

    #[test]
    fn single_edge_points() {
        let pts: Vec<Vec<i64>> = enumerate_p_points(&single_edge(), 4).unwrap().into_iter().map(|p| p.w).collect();
        assert_eq!(pts, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn counters_agree_with_box_oracle() {
        let graphs = [dumbbell(), star(), single_edge(), theta(), k4(), caterpillar(1, 1).unwrap(), caterpillar(2, 1).unwrap()];
        for g in &graphs {
            for polytope in [Polytope::P, Polytope::Q] {
                for t in 0..=4 {
                    let want = box_count(g, polytope, t);
                    assert_eq!(dfs_count(g, polytope, t).unwrap(), want, "dfs {g} {polytope} t={t}");
                    assert_eq!(count(g, polytope, t).unwrap(), want, "elim {g} {polytope} t={t}");
                    let n = Enumerator::new(g, polytope, t).unwrap().for_each(|_| {}).unwrap();
                    assert_eq!(n as u128, want);
                }
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_inside() {
        let g = caterpillar(2, 1).unwrap();
        let pts = enumerate_q_points(&g, 3).unwrap();
        let sys = build_system(&g, Polytope::Q).unwrap();
        for pair in pts.windows(2) {
            assert!(pair[0].w < pair[1].w);
        }
        for p in &pts {
            assert!(sys.contains(3, &p.coords()).unwrap());
        }
    }

    #[test]
    fn dumbbell_cosets_at_two() {
        let g = dumbbell();
        let vols: Vec<u128> = enumerate_internally_eulerian(&g)
            .unwrap()
            .into_iter()
            .map(|h| vol_coset(&g, h, 2).unwrap())
            .collect();
        assert_eq!(vols, vec![4, 2, 2, 2]);
        let part: Vec<String> = coset_points(&g, EdgeSubset::from_edges([0]), 2)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(part, vec!["(1,0,0), (1,0)", "(1,2,0), (1,2)"]);
        assert_eq!(vol_coset(&g, EdgeSubset::from_edges([2]), 2), Err(Error::NotEulerian));
        assert_eq!(vol_coset(&k4(), EdgeSubset::empty(), 0).unwrap(), 1);
    }

    #[test]
    fn parity_and_shift_examples() {
        let e = single_edge();
        assert_eq!(parity_counts(&e, 4, 0, Polytope::P).unwrap(), (2, 1));
        let (even, odd) = parity_counts(&e, 2, 0, Polytope::P).unwrap();
        assert_eq!(even, odd);
        let (outs, ins) = out_in_sets(&e, 4, 0).unwrap();
        assert_eq!(outs, vec![PPoint { w: vec![2] }]);
        assert!(ins.is_empty());

        let g11 = caterpillar(1, 1).unwrap();
        let leaf = g11.leaf_edges()[0];
        let (even, odd) = parity_counts(&g11, 2, leaf, Polytope::P).unwrap();
        assert_eq!(even - odd, 2);
        let (outs, ins) = out_in_sets(&g11, 2, leaf).unwrap();
        assert_eq!((outs.len(), ins.len()), (2, 0));
    }

    #[test]
    fn tree_dp_matches_dfs() {
        let t7 = MultiGraph::new(8, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7)]).unwrap();
        for g in [star(), single_edge(), caterpillar(4, 0).unwrap(), t7] {
            for polytope in [Polytope::P, Polytope::Q] {
                for t in 0..=6 {
                    assert_eq!(
                        tree_dp_count(&g, t, polytope).unwrap(),
                        dfs_count(&g, polytope, t).unwrap(),
                        "{g} {polytope} t={t}"
                    );
                }
            }
        }
        assert_eq!(tree_dp_count(&star(), 1, Polytope::Q).unwrap(), 4);
        assert_eq!(tree_dp_count(&dumbbell(), 1, Polytope::Q), Err(Error::NotTree));
    }

    #[test]
    fn budget_is_enforced() {
        let g = k4();
        let r = Enumerator::new(&g, Polytope::Q, 6).unwrap().budget(10).count();
        assert_eq!(r, Err(Error::BudgetExceeded { budget: 10 }));
        assert!(count_restricted(&g, Polytope::Q, 6, &[], 10).is_err());
    }

    #[test]
    fn enumeration_cap() {
        let g = caterpillar(7, 0).unwrap();
        assert!(g.m() > ENUM_MAX_EDGES);
        assert!(matches!(enumerate_p_points(&g, 1), Err(Error::TooLarge { .. })));
    }
}
