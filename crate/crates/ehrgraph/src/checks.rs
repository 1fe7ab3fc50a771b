//! Numerical checks of the counting identities for `P_G` and `Q_G`.
//!
//! Every check computes both sides of an identity from raw lattice counts
//! (or, for polynomial identities, from independently interpolated
//! quasi-polynomials) and records each disagreement with its instance.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::json;

use crate::ehrhart::{ehrhart_of, ratio_string, rat, rint, Poly};
use crate::error::{Error, Result};
use crate::families::{connected_one_three_graphs_upto, one_three_trees};
use crate::lattice::{coset_points, count_p, count_q, out_in_sets, parity_counts, vol_coset};
use crate::multigraph::{
    caterpillar, caterpillar_coset, coset_shape, enumerate_internally_eulerian, MultiGraph,
};
use crate::nni::{apply_nni, induced_eulerian, nni_moves, weighted_nni};
use crate::polytope::{build_q_system, Polytope, QPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub t: Option<u64>,
    pub lhs: String,
    pub rhs: String,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub check: String,
    pub grid: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Cases that could not be evaluated (budget, size caps).
    pub errors: Vec<String>,
}

impl Report {
    pub fn new(check: &str, grid: impl Into<String>) -> Self {
        Report { check: check.into(), grid: grid.into(), cases: 0, failures: Vec::new(), errors: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.errors.is_empty()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    /// Counts one case and records a failure if the sides differ.
    pub fn compare<T: PartialEq + fmt::Display>(&mut self, instance: impl Into<String>, t: Option<u64>, lhs: T, rhs: T) {
        self.cases += 1;
        if lhs != rhs {
            self.failures.push(Failure { instance: instance.into(), t, lhs: lhs.to_string(), rhs: rhs.to_string(), witness: None });
        }
    }

    pub fn compare_q(&mut self, instance: impl Into<String>, t: Option<u64>, lhs: &BigRational, rhs: &BigRational) {
        self.cases += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                instance: instance.into(),
                t,
                lhs: ratio_string(lhs),
                rhs: ratio_string(rhs),
                witness: None,
            });
        }
    }

    pub fn fail(&mut self, failure: Failure) {
        self.cases += 1;
        self.failures.push(failure);
    }

    pub fn pass(&mut self) {
        self.cases += 1;
    }

    pub fn error(&mut self, instance: impl fmt::Display, err: Error) {
        self.errors.push(format!("{instance}: {err}"));
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "check": self.check,
            "grid": self.grid,
            "status": self.status(),
            "cases": self.cases,
            "failures": self.failures,
            "errors": self.errors,
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: {} ({} cases", self.check, self.grid, self.status().to_uppercase(), self.cases)?;
        if !self.failures.is_empty() {
            write!(f, ", {} failures", self.failures.len())?;
        }
        if !self.errors.is_empty() {
            write!(f, ", {} errors", self.errors.len())?;
        }
        write!(f, ")")?;
        for x in self.failures.iter().take(10) {
            write!(f, "\n  {}", x.instance)?;
            if let Some(t) = x.t {
                write!(f, " t={t}")?;
            }
            write!(f, ": {} vs {}", x.lhs, x.rhs)?;
            if let Some(w) = &x.witness {
                write!(f, " witness {w}")?;
            }
        }
        for e in self.errors.iter().take(10) {
            write!(f, "\n  error {e}")?;
        }
        Ok(())
    }
}

fn big(x: u128) -> BigRational {
    rint(BigInt::from(x))
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn pow2(e: usize) -> BigRational {
    rint(BigInt::one() << e)
}

/// `(t/2 + 1)^e` for even `t`.
fn half_plus_one_pow(t: u64, e: usize) -> BigRational {
    rint(BigInt::from(t / 2 + 1).pow(e as u32))
}

fn evens(t_max: u64) -> impl Iterator<Item = u64> {
    (0..=t_max).step_by(2)
}

fn vol(h: usize, k: usize, i: usize, j: usize, t: u64) -> Result<u128> {
    vol_coset(&caterpillar(h, k)?, caterpillar_coset(h, k, i, j)?, t)
}

fn label(h: usize, k: usize) -> String {
    format!("G({h},{k})")
}

/// `Δ_{h,k}(t)`: even minus odd weights on leaf-edge `a` over `tP_{G_{h,k}}`.
pub fn delta(h: usize, k: usize, t: u64, a: usize) -> Result<BigRational> {
    let (even, odd) = parity_counts(&caterpillar(h, k)?, t, a, Polytope::P)?;
    Ok(big(even) - big(odd))
}

fn leaf_edge_ids(h: usize, k: usize) -> Result<Vec<usize>> {
    Ok(caterpillar(h, k)?.leaf_edges())
}

/// `L^Q(t)` against the loop/leaf-path decomposition of the coset sum, and
/// the plain coset sum, for even `t`.
pub fn check_key_summation(h: usize, k: usize, t_max: u64) -> Report {
    let mut rep = Report::new("key-summation", format!("{} t<={t_max}", label(h, k)));
    let inst = label(h, k);
    let run = |rep: &mut Report| -> Result<()> {
        let g = caterpillar(h, k)?;
        let cosets = enumerate_internally_eulerian(&g)?;
        for t in evens(t_max) {
            let lq = big(count_q(&g, t)?);
            let mut raw = BigRational::zero();
            for &hs in &cosets {
                raw += big(vol_coset(&g, hs, t)?);
            }
            rep.compare_q(format!("{inst} coset sum"), Some(t), &lq, &raw);

            let mut leafy = BigRational::zero();
            for i in 0..=h / 2 {
                leafy += rint(binom(h, 2 * i)) * big(vol(h, k, i, 0, t)?);
            }
            let rhs = if k >= 1 {
                let loops = big(vol(h, k, 0, 0, t)?) - big(vol(h, k, 0, 1, t)?);
                pow2(k) * leafy - (pow2(k) - rint(1)) * loops
            } else {
                leafy
            };
            rep.compare_q(format!("{inst} decomposition"), Some(t), &lq, &rhs);
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error(&inst, e);
    }
    rep
}

/// One-less-leaf-path recursion, the closed coset size, and the leaf-path
/// summation, for even `t`.
pub fn check_leaf_path_recursion(h: usize, k: usize, t_max: u64) -> Report {
    let mut rep = Report::new("leaf-path", format!("{} t<={t_max}", label(h, k)));
    let inst = label(h, k);
    let valid = |h: usize, k: usize| h + k >= 2;
    let run = |rep: &mut Report| -> Result<()> {
        for t in evens(t_max) {
            if h >= 2 && k >= 1 {
                for i in 1..=h / 2 {
                    let lhs = vol(h, k, i, 0, t)?;
                    let rhs = vol(h, k, i - 1, 0, t)? as i128 - vol(h - 1, k, i - 1, 0, t)? as i128;
                    rep.compare(format!("{inst} one less leaf-path i={i}"), Some(t), lhs as i128, rhs);
                }
            }
            if k >= 1 {
                for i in 0..=h / 2 {
                    if (0..=i).any(|j| !valid(h - j, k)) {
                        continue;
                    }
                    let lhs = big(vol(h, k, i, 0, t)?);
                    let mut rhs = BigRational::zero();
                    for j in 0..=i {
                        let term = rint(binom(i, j)) * big(count_p(&caterpillar(h - j, k)?, t)?);
                        if j % 2 == 0 {
                            rhs += term;
                        } else {
                            rhs -= term;
                        }
                    }
                    rep.compare_q(format!("{inst} coset size i={i}"), Some(t), &lhs, &rhs);
                }
            }
            // Summation form; needs G_{h-j,k} for every j <= h/2.
            if (1..=h / 2).all(|j| valid(h - j, k)) {
                let mut lhs = BigRational::zero();
                for i in 0..=h / 2 {
                    lhs += rint(binom(h, 2 * i)) * big(vol(h, k, i, 0, t)?);
                }
                lhs *= pow2(k);
                let n = if h == 0 { pow2(k) } else { pow2(k + h - 1) };
                let mut inner = big(count_p(&caterpillar(h, k)?, t)?);
                for j in 1..=h / 2 {
                    let coef = rint(binom(h - j, j)) * rat(h as i64, (h - j) as i64)
                        / rint(BigInt::from(-4).pow(j as u32));
                    inner += coef * big(count_p(&caterpillar(h - j, k)?, t)?);
                }
                rep.compare_q(format!("{inst} summation"), Some(t), &lhs, &(n * inner));
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error(&inst, e);
    }
    rep
}

/// `vol_t(∅) − vol_t(H_{0,1})` against `(t/2+1)^{k−1}` or `0`.
pub fn check_loop_difference(h: usize, k: usize, t_max: u64) -> Report {
    let mut rep = Report::new("loop-lemma", format!("{} t<={t_max}", label(h, k)));
    let inst = label(h, k);
    if k == 0 {
        return rep;
    }
    let run = |rep: &mut Report| -> Result<()> {
        for t in evens(t_max) {
            let diff = big(vol(h, k, 0, 0, t)?) - big(vol(h, k, 0, 1, t)?);
            let want = if t % 4 == 0 || h == 0 { half_plus_one_pow(t, k - 1) } else { BigRational::zero() };
            rep.compare_q(&inst, Some(t), &diff, &want);
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error(&inst, e);
    }
    rep
}

/// `Δ_{h,k}`: closed form, independence of the leaf-edge, the product
/// recursion, and the equality with the loop difference of `G_{h−1,k+1}`.
pub fn check_delta(h: usize, k: usize, t_max: u64) -> Report {
    let mut rep = Report::new("delta", format!("{} t<={t_max}", label(h, k)));
    let inst = label(h, k);
    if h == 0 {
        return rep;
    }
    let run = |rep: &mut Report| -> Result<()> {
        let leaf_edges = leaf_edge_ids(h, k)?;
        let a = leaf_edges[0];
        for t in evens(t_max) {
            let d = delta(h, k, t, a)?;
            let want = if t % 4 == 0 || h == 1 { half_plus_one_pow(t, k) } else { BigRational::zero() };
            rep.compare_q(format!("{inst} closed form"), Some(t), &d, &want);
            for &b in &leaf_edges[1..] {
                rep.compare_q(format!("{inst} leaf-edge {b}"), Some(t), &delta(h, k, t, b)?, &d);
            }
            if h + k >= 3 {
                let (bh, bk, ch, ck) = if h == 1 { (1, 1, 1, k - 1) } else { (2, 0, h - 1, k) };
                let fa = delta(bh, bk, t, leaf_edge_ids(bh, bk)?[0])?;
                let fb = delta(ch, ck, t, leaf_edge_ids(ch, ck)?[0])?;
                rep.compare_q(format!("{inst} product"), Some(t), &d, &(fa * fb));
            }
            if h + k >= 2 && h >= 1 {
                let (gh, gk) = (h - 1, k + 1);
                let loops = big(vol(gh, gk, 0, 0, t)?) - big(vol(gh, gk, 0, 1, t)?);
                rep.compare_q(format!("{inst} vs loop difference of {}", label(gh, gk)), Some(t), &d, &loops);
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error(&inst, e);
    }
    rep
}

/// Even-minus-odd point counts against `|Out_e| − |In_e|`, for every edge
/// and every `t <= t_max`.
pub fn check_parity_shift(g: &MultiGraph, t_max: u64) -> Report {
    let mut rep = Report::new("shift", format!("m={} t<={t_max}", g.m()));
    let inst = format!("graph {}", g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(","));
    let run = |rep: &mut Report| -> Result<()> {
        for t in 0..=t_max {
            for e in 0..g.m() {
                let (even, odd) = parity_counts(g, t, e, Polytope::P)?;
                let (outs, ins) = out_in_sets(g, t, e)?;
                rep.compare(format!("{inst} edge {e}"), Some(t), even as i128 - odd as i128, outs.len() as i128 - ins.len() as i128);
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error(&inst, e);
    }
    rep
}

/// A bounded planar set: rows `y = 0..8` of integer `x`, each row an
/// interval `[lo, hi]`.
pub fn shift_region() -> Vec<(i64, i64)> {
    let mut rows = vec![(1, 6); 8];
    rows[3] = (1, 7);
    rows.into_iter()
        .enumerate()
        .flat_map(|(y, (lo, hi))| (lo..=hi).map(move |x| (x, y as i64)))
        .collect()
}

/// `(even − odd, |Out|, |In|)` for shifting along `x` in a finite point set.
pub fn shift_counts(points: &[(i64, i64)]) -> (i64, usize, usize) {
    let set: std::collections::BTreeSet<(i64, i64)> = points.iter().copied().collect();
    let even = set.iter().filter(|p| p.0 % 2 == 0).count() as i64;
    let odd = set.len() as i64 - even;
    let outs = set.iter().filter(|p| p.0 % 2 == 0 && !set.contains(&(p.0 + 1, p.1))).count();
    let ins = set.iter().filter(|p| p.0 % 2 != 0 && !set.contains(&(p.0 - 1, p.1))).count();
    (even - odd, outs, ins)
}

pub fn check_shift_region() -> Report {
    let mut rep = Report::new("shift", "planar region");
    let (diff, outs, ins) = shift_counts(&shift_region());
    rep.compare("planar region", None, diff, outs as i64 - ins as i64);
    rep.compare("planar region Out", None, outs, 7);
    rep.compare("planar region In", None, ins, 8);
    rep
}

/// Number of internally Eulerian subgraphs, by enumeration.
fn eulerian_number(g: &MultiGraph) -> Result<u128> {
    Ok(enumerate_internally_eulerian(g)?.len() as u128)
}

/// `L^Q(t) = N_G · L^P(t)` for odd `t <= t_odd_max`.
pub fn check_odd_relation(g: &MultiGraph, t_odd_max: u64) -> Report {
    let mut rep = Report::new("odd-relation", format!("m={} t<={t_odd_max}", g.m()));
    let inst = format!("graph {}", g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(","));
    let run = |rep: &mut Report| -> Result<()> {
        let n = eulerian_number(g)?;
        for t in (1..=t_odd_max).step_by(2) {
            rep.compare(&inst, Some(t), count_q(g, t)?, n * count_p(g, t)?);
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error(&inst, e);
    }
    rep
}

/// `h/4^h (1 − 2^{−k}) Σ_j 2^{h−j+1}/(h+j) C(h+j,j)`, the leading factor of
/// `p_0 − p_2` for `G_{h,k}` (times `(t/2+1)^{k−1}`).
pub fn constituent_gap_factor(h: usize, k: usize) -> BigRational {
    let mut s = BigRational::zero();
    for j in 0..h {
        s += pow2(h - j + 1) * rint(binom(h + j, j)) / rint(BigInt::from(h + j));
    }
    rat(h as i64, 1) / rint(BigInt::from(4).pow(h as u32)) * (rint(1) - rint(1) / pow2(k)) * s
}

/// `(t/2 + 1)^e` as a polynomial in `t`.
fn half_plus_one_poly(e: usize) -> Poly {
    Poly::linear(rat(1, 2), rint(1)).pow(e)
}

/// Polynomial identities among the constituents of `L^P_{h,k}` and
/// `L^Q_{h,k}`, and the period.
pub fn check_constituent_relations(h: usize, k: usize) -> Report {
    let mut rep = Report::new("constituents", label(h, k));
    let inst = label(h, k);
    let run = |rep: &mut Report| -> Result<()> {
        let g = caterpillar(h, k)?;
        let lp = ehrhart_of(&g, Polytope::P)?.with_modulus(4);
        let lq = ehrhart_of(&g, Polytope::Q)?.with_modulus(2);
        let (p0, p1, p2, p3) = (lp.constituent(0), lp.constituent(1), lp.constituent(2), lp.constituent(3));
        rep.compare(format!("{inst} p1 = p3"), None, p1.to_string(), p3.to_string());
        let n = if h == 0 { pow2(k) } else { pow2(k + h - 1) };
        if h == 0 {
            let corr = half_plus_one_poly(k - 1).scale(&(n.clone() - rint(1)));
            for (name, p) in [("p0", p0), ("p2", p2)] {
                let rhs = p.scale(&n).sub(&corr);
                rep.compare(format!("{inst} q0 = N {name} - (N-1)(t/2+1)^(k-1)"), None, lq.constituent(0).to_string(), rhs.to_string());
            }
        }
        if h >= 1 && k >= 1 {
            let want = half_plus_one_poly(k - 1).scale(&constituent_gap_factor(h, k));
            rep.compare(format!("{inst} p0 - p2"), None, p0.sub(p2).to_string(), want.to_string());
        }
        let want_period = if k == 0 || h == 0 { 2 } else { 4 };
        rep.compare(format!("{inst} period of L^P"), None, lp.period(), want_period);
        let q_period = lq.period();
        if k == 0 {
            rep.compare(format!("{inst} period of L^Q"), None, q_period, 1);
        } else {
            rep.compare(format!("{inst} period of L^Q at most 2"), None, q_period <= 2, true);
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error(&inst, e);
    }
    rep
}

/// `Σ_{i=j}^{⌊h/2⌋} C(h,2i) C(i,j) = C(h−j,j) h/(h−j) 2^{h−1−2j}`.
pub fn check_binomial_identity(h_max: usize) -> Report {
    let mut rep = Report::new("binomial", format!("h<={h_max}"));
    for h in 1..=h_max {
        for j in 0..=h / 2 {
            let lhs: BigInt = (j..=h / 2).map(|i| binom(h, 2 * i) * binom(i, j)).sum();
            let e = h as i64 - 1 - 2 * j as i64;
            let p = if e >= 0 { pow2(e as usize) } else { rint(1) / pow2((-e) as usize) };
            let rhs = rint(binom(h - j, j)) * rat(h as i64, (h - j) as i64) * p;
            rep.compare_q(format!("h={h} j={j}"), None, &rint(lhs), &rhs);
        }
    }
    rep
}

/// `(−1)^h Σ_{j<h} 2^{h−j+1}/(h+j) C(h+j,j)`.
pub fn d_closed_form(h: usize) -> BigRational {
    let mut s = BigRational::zero();
    for j in 0..h {
        s += pow2(h - j + 1) * rint(binom(h + j, j)) / rint(BigInt::from(h + j));
    }
    if h % 2 == 1 {
        -s
    } else {
        s
    }
}

/// `d(α)` from the interpolated gap `p_0 − p_2` of `G_{α,k}` at even `t`.
pub fn d_from_constituents(gap: &Poly, alpha: usize, k: usize, t: u64) -> BigRational {
    let scale = rint(BigInt::from(-4).pow(alpha as u32)) / rint(BigInt::from(alpha));
    let denom = (rint(1) - rint(1) / pow2(k)) * half_plus_one_pow(t, k - 1);
    scale * gap.eval_int(t as i64) / denom
}

/// `d(α)` from interpolation at two probes, the recurrence
/// `Σ_j C(h−j,j) d(h−j) = (−1)^h 2^{h+1}/h`, the closed form and the sign
/// pattern.
pub fn check_d_recurrence(h_max: usize, k: usize, t_probe: u64) -> Report {
    let mut rep = Report::new("d-recurrence", format!("h<={h_max} k={k} t={t_probe}"));
    if k == 0 || t_probe % 2 == 1 {
        rep.error("d-recurrence", Error::InvalidShape { h: h_max, k });
        return rep;
    }
    let run = |rep: &mut Report| -> Result<()> {
        let mut d = vec![BigRational::zero()];
        for alpha in 1..=h_max {
            let lp = ehrhart_of(&caterpillar(alpha, k)?, Polytope::P)?.with_modulus(4);
            let gap = lp.constituent(0).sub(lp.constituent(2));
            let first = d_from_constituents(&gap, alpha, k, t_probe);
            let second = d_from_constituents(&gap, alpha, k, t_probe + 2);
            rep.compare_q(format!("d({alpha}) second probe"), Some(t_probe + 2), &second, &first);
            rep.compare_q(format!("d({alpha}) closed form"), Some(t_probe), &first, &d_closed_form(alpha));
            let sign_ok = if alpha % 2 == 0 { first.is_positive() } else { first.is_negative() };
            rep.compare(format!("d({alpha}) sign"), Some(t_probe), sign_ok, true);
            d.push(first);
        }
        for h in 1..=h_max {
            let lhs: BigRational = (0..h).map(|j| rint(binom(h - j, j)) * d[h - j].clone()).sum();
            let sign = if h % 2 == 1 { rint(-1) } else { rint(1) };
            let rhs = sign * pow2(h + 1) / rint(BigInt::from(h));
            rep.compare_q(format!("recurrence h={h}"), Some(t_probe), &lhs, &rhs);
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error("d-recurrence", e);
    }
    rep
}

/// Coset volumes of `G_{h,k}` depend only on the number of leaf-paths and
/// on whether a loop is present.
pub fn check_same_shape_cosets(h: usize, k: usize, t_max: u64) -> Report {
    let mut rep = Report::new("same-shape", format!("{} t<={t_max}", label(h, k)));
    let inst = label(h, k);
    let run = |rep: &mut Report| -> Result<()> {
        let g = caterpillar(h, k)?;
        let cosets = enumerate_internally_eulerian(&g)?;
        for t in 0..=t_max {
            for &hs in &cosets {
                let (i, j) = coset_shape(&g, hs);
                let v = vol_coset(&g, hs, t)?;
                let reference = vol(h, k, i, j, t)?;
                rep.compare(format!("{inst} {hs} vs H({i},{j})"), Some(t), v, reference);
                if j >= 2 {
                    rep.compare(format!("{inst} H({i},{j}) vs H({i},1)"), Some(t), v, vol(h, k, i, 1, t)?);
                }
                if j == 0 && i >= 1 && k >= 1 {
                    rep.compare(format!("{inst} H({i},0) vs H({i},1)"), Some(t), v, vol(h, k, i, 1, t)?);
                }
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error(&inst, e);
    }
    rep
}

fn point_string(p: &QPoint) -> String {
    p.to_string()
}

/// Every NNI move of `g`, every coset and every `t <= t_max`: the weighted
/// move sends `part_t(G,H)` bijectively onto `part_t(G',H')`, and the
/// mirrored move undoes it.
pub fn check_nni_bijection(g: &MultiGraph, t_max: u64) -> Report {
    let mut rep = Report::new("nni-bijection", format!("m={} t<={t_max}", g.m()));
    let inst = format!("graph {}", g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(","));
    let run = |rep: &mut Report| -> Result<()> {
        let cosets = enumerate_internally_eulerian(g)?;
        for trail in nni_moves(g) {
            let g2 = apply_nni(g, trail)?;
            let system = build_q_system(&g2)?;
            for &hs in &cosets {
                let h2 = induced_eulerian(g, trail, hs)?;
                for t in 0..=t_max {
                    let case = format!("{inst} {trail} H={hs}");
                    let source = coset_points(g, hs, t)?;
                    let mut target = coset_points(&g2, h2, t)?;
                    target.sort_by(|a, b| a.coords().cmp(&b.coords()));
                    let mut images = Vec::with_capacity(source.len());
                    let mut bad: Option<(String, String)> = None;
                    for p in &source {
                        let img = weighted_nni(g, trail, p)?;
                        let back = weighted_nni(&g2, trail.mirrored(), &img)?;
                        if &back != p && bad.is_none() {
                            bad = Some((point_string(p), format!("round trip gives {back}")));
                        }
                        if !system.contains(t as i64, &img.coords())? && bad.is_none() {
                            bad = Some((point_string(p), format!("image {img} outside tQ")));
                        }
                        images.push(img);
                    }
                    images.sort_by(|a, b| a.coords().cmp(&b.coords()));
                    let injective = images.windows(2).all(|w| w[0] != w[1]);
                    if bad.is_none() && (!injective || images != target) {
                        let missing = target.iter().find(|q| images.binary_search_by(|x| x.coords().cmp(&q.coords())).is_err());
                        bad = Some((
                            format!("{} images vs {} targets", images.len(), target.len()),
                            missing.map(|q| format!("target {q} not hit")).unwrap_or_else(|| "images repeat".into()),
                        ));
                    }
                    match bad {
                        Some((lhs, rhs)) => rep.fail(Failure { instance: case, t: Some(t), lhs, rhs, witness: None }),
                        None => rep.pass(),
                    }
                }
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error(&inst, e);
    }
    rep
}

/// Period of `L^P` and `L^Q` for a graph: 2 and 1 on trees, at most 2 on
/// cubic graphs, 4 when there are both leaves and cycles.
pub fn check_period(g: &MultiGraph) -> Report {
    let mut rep = Report::new("periods", format!("m={}", g.m()));
    let inst = format!("graph {}", g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(","));
    let run = |rep: &mut Report| -> Result<()> {
        let s = g.require_one_three()?;
        let p = ehrhart_of(g, Polytope::P)?.period();
        let q = ehrhart_of(g, Polytope::Q)?.period();
        if s.k == 0 {
            rep.compare(format!("{inst} period of L^P"), None, p, 2);
            rep.compare(format!("{inst} period of L^Q"), None, q, 1);
        } else if s.h == 0 {
            rep.compare(format!("{inst} period of L^P at most 2"), None, p <= 2, true);
        } else {
            rep.compare(format!("{inst} period of L^P"), None, p, 4);
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.error(&inst, e);
    }
    rep
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grid {
    Small,
    Full,
}

impl Grid {
    pub fn name(self) -> &'static str {
        match self {
            Grid::Small => "small",
            Grid::Full => "full",
        }
    }

    /// Largest even dilation for coset identities.
    pub fn t_max(self) -> u64 {
        match self {
            Grid::Small => 6,
            Grid::Full => 8,
        }
    }

    /// Largest `h + k` for caterpillar families.
    pub fn legs_max(self) -> usize {
        match self {
            Grid::Small => 4,
            Grid::Full => 5,
        }
    }

    /// Largest edge count for checks over arbitrary graphs.
    pub fn edges_max(self) -> usize {
        match self {
            Grid::Small => 6,
            Grid::Full => 8,
        }
    }
}

impl std::str::FromStr for Grid {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Grid::Small),
            "full" => Ok(Grid::Full),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown grid `{s}`") }),
        }
    }
}

pub const SUITES: [&str; 12] = [
    "key-summation",
    "leaf-path",
    "loop-lemma",
    "delta",
    "shift",
    "odd-relation",
    "constituents",
    "binomial",
    "d-recurrence",
    "same-shape",
    "nni-bijection",
    "periods",
];

/// Caterpillar shapes `(h, k)` with `2 <= h + k <= legs`.
pub fn caterpillar_shapes(legs: usize) -> Vec<(usize, usize)> {
    (2..=legs).flat_map(|s| (0..=s).map(move |k| (s - k, k))).collect()
}

type Job = Box<dyn Fn() -> Report + Send + Sync>;

/// Independent cells of one suite.
pub fn suite_jobs(name: &str, grid: Grid) -> Result<Vec<Job>> {
    let t = grid.t_max();
    let shapes = caterpillar_shapes(grid.legs_max());
    let mut jobs: Vec<Job> = Vec::new();
    match name {
        "key-summation" => {
            for (h, k) in shapes {
                jobs.push(Box::new(move || check_key_summation(h, k, t)));
            }
        }
        "leaf-path" => {
            for (h, k) in shapes {
                jobs.push(Box::new(move || check_leaf_path_recursion(h, k, t)));
            }
        }
        "loop-lemma" => {
            for (h, k) in shapes.into_iter().filter(|s| s.1 >= 1) {
                jobs.push(Box::new(move || check_loop_difference(h, k, t)));
            }
        }
        "delta" => {
            for (h, k) in shapes.into_iter().filter(|s| s.0 >= 1) {
                jobs.push(Box::new(move || check_delta(h, k, t)));
            }
        }
        "shift" => {
            jobs.push(Box::new(check_shift_region));
            let m = match grid {
                Grid::Small => 4,
                Grid::Full => 5,
            };
            for g in connected_one_three_graphs_upto(m) {
                jobs.push(Box::new(move || check_parity_shift(&g, 6)));
            }
        }
        "odd-relation" => {
            for g in connected_one_three_graphs_upto(grid.edges_max()) {
                jobs.push(Box::new(move || check_odd_relation(&g, 5)));
            }
        }
        "constituents" => {
            let legs = match grid {
                Grid::Small => 3,
                Grid::Full => 4,
            };
            for (h, k) in caterpillar_shapes(legs) {
                jobs.push(Box::new(move || check_constituent_relations(h, k)));
            }
        }
        "binomial" => {
            let h = match grid {
                Grid::Small => 12,
                Grid::Full => 30,
            };
            jobs.push(Box::new(move || check_binomial_identity(h)));
        }
        "d-recurrence" => {
            let (h, ks) = match grid {
                Grid::Small => (3, vec![1]),
                Grid::Full => (4, vec![1, 2]),
            };
            for k in ks {
                jobs.push(Box::new(move || check_d_recurrence(h, k, 0)));
            }
        }
        "same-shape" => {
            for (h, k) in shapes {
                jobs.push(Box::new(move || check_same_shape_cosets(h, k, 6)));
            }
        }
        "nni-bijection" => {
            let m = match grid {
                Grid::Small => 5,
                Grid::Full => 6,
            };
            for g in connected_one_three_graphs_upto(m) {
                jobs.push(Box::new(move || check_nni_bijection(&g, 6)));
            }
        }
        "periods" => {
            let tree_edges = match grid {
                Grid::Small => 7,
                Grid::Full => 9,
            };
            for g in one_three_trees(tree_edges) {
                jobs.push(Box::new(move || check_period(&g)));
            }
            let legs = match grid {
                Grid::Small => 4,
                Grid::Full => 5,
            };
            for (h, k) in caterpillar_shapes(legs).into_iter().filter(|s| s.0 >= 1 && s.1 >= 1) {
                jobs.push(Box::new(move || match caterpillar(h, k) {
                    Ok(g) => check_period(&g),
                    Err(e) => {
                        let mut r = Report::new("periods", label(h, k));
                        r.error(label(h, k), e);
                        r
                    }
                }));
            }
        }
        _ => return Err(Error::Parse { line: 0, msg: format!("unknown suite `{name}`") }),
    }
    Ok(jobs)
}

/// Runs the named suites on `jobs` threads. Reports come back merged per
/// suite in suite order, independent of the thread count.
pub fn run_suites(names: &[&str], grid: Grid, jobs: usize) -> Result<Vec<Report>> {
    let mut cells: Vec<(usize, Job)> = Vec::new();
    for (si, name) in names.iter().enumerate() {
        for job in suite_jobs(name, grid)? {
            cells.push((si, job));
        }
    }
    let results: Vec<Mutex<Option<Report>>> = cells.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..jobs.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= cells.len() {
                    break;
                }
                let r = (cells[i].1)();
                *results[i].lock().unwrap() = Some(r);
            });
        }
    });
    let mut merged: Vec<Report> =
        names.iter().map(|n| Report::new(n, grid.name())).collect();
    for ((si, _), r) in cells.iter().zip(results) {
        let r = r.into_inner().unwrap().expect("every cell ran");
        let m = &mut merged[*si];
        m.cases += r.cases;
        m.failures.extend(r.failures);
        m.errors.extend(r.errors);
    }
    Ok(merged)
}
