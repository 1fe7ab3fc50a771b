//! Exact polynomials and quasi-polynomials over the rationals, interpolation
//! from point counts, and period detection.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::lattice;
use crate::multigraph::MultiGraph;
use crate::polytope::Polytope;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rint(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Polynomial in `t`, coefficients constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        Poly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    /// `a*t + b`.
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        Poly::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> BigRational {
        self.eval(&rint(t))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, n: usize) -> Poly {
        (0..n).fold(Poly::constant(BigRational::one()), |acc, _| acc.mul(self))
    }

    /// The unique polynomial of degree below `points.len()` through the
    /// given points (distinct abscissae).
    pub fn lagrange(points: &[(BigRational, BigRational)]) -> Poly {
        let mut total = Poly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Poly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    let denom = xi - xj;
                    basis = basis.mul(&Poly::linear(BigRational::one() / &denom, -xj / &denom));
                }
            }
            total = total.add(&basis);
        }
        total
    }

    /// Coefficients as reduced fraction strings, constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ratio_string).collect()
    }
}

pub fn ratio_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for Poly {
    /// Descending powers, e.g. `t³/6 + t² + 11t/6 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let num = c.numer().abs();
            let den = c.denom();
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t{}", superscript(k)),
            };
            let num_s = if k > 0 && num.is_one() { String::new() } else { num.to_string() };
            let den_s = if den.is_one() { String::new() } else { format!("/{den}") };
            write!(f, "{num_s}{var}{den_s}")?;
        }
        Ok(())
    }
}

/// `t -> constituents[t mod modulus](t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    modulus: usize,
    constituents: Vec<Poly>,
}

impl QuasiPolynomial {
    pub fn new(constituents: Vec<Poly>) -> Self {
        assert!(!constituents.is_empty(), "a quasi-polynomial needs a constituent");
        QuasiPolynomial { modulus: constituents.len(), constituents }
    }

    pub fn polynomial(p: Poly) -> Self {
        QuasiPolynomial::new(vec![p])
    }

    pub fn constant(c: BigRational) -> Self {
        QuasiPolynomial::polynomial(Poly::constant(c))
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn constituents(&self) -> &[Poly] {
        &self.constituents
    }

    /// Constituent used at every `t ≡ r (mod modulus)`.
    pub fn constituent(&self, r: usize) -> &Poly {
        &self.constituents[r % self.modulus]
    }

    pub fn evaluate(&self, t: u64) -> BigRational {
        self.constituent((t % self.modulus as u64) as usize).eval(&rint(t))
    }

    /// Smallest divisor `d` of the modulus with `p_r = p_{r+d}` for all `r`.
    pub fn period(&self) -> usize {
        let a = self.modulus;
        (1..=a)
            .filter(|d| a % d == 0)
            .find(|&d| (0..a).all(|r| self.constituents[r] == self.constituents[(r + d) % a]))
            .unwrap_or(a)
    }

    /// Same function with the modulus cut down to the period.
    pub fn reduced(&self) -> QuasiPolynomial {
        QuasiPolynomial::new(self.constituents[..self.period()].to_vec())
    }

    /// Same function stored with modulus `a`, a multiple of the current one.
    pub fn with_modulus(&self, a: usize) -> QuasiPolynomial {
        assert!(a % self.modulus == 0, "{a} is not a multiple of {}", self.modulus);
        QuasiPolynomial::new((0..a).map(|r| self.constituent(r).clone()).collect())
    }

    fn zip(&self, other: &QuasiPolynomial, op: impl Fn(&Poly, &Poly) -> Poly) -> QuasiPolynomial {
        let a = self.modulus.lcm(&other.modulus);
        QuasiPolynomial::new((0..a).map(|r| op(self.constituent(r), other.constituent(r))).collect())
    }

    pub fn add(&self, other: &QuasiPolynomial) -> QuasiPolynomial {
        self.zip(other, Poly::add)
    }

    pub fn sub(&self, other: &QuasiPolynomial) -> QuasiPolynomial {
        self.zip(other, Poly::sub)
    }

    /// Pointwise product; used for the product over connected components.
    pub fn mul(&self, other: &QuasiPolynomial) -> QuasiPolynomial {
        self.zip(other, Poly::mul)
    }

    /// Equality as functions on the nonnegative integers.
    pub fn same_function(&self, other: &QuasiPolynomial) -> bool {
        self.reduced() == other.reduced()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cs: Vec<Vec<String>> = self.constituents.iter().map(Poly::coeff_strings).collect();
        json!({ "modulus": self.modulus, "constituents": cs })
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.modulus == 1 {
            return write!(f, "{}", r.constituents[0]);
        }
        for (i, p) in r.constituents.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "p{i} = {p}")?;
        }
        Ok(())
    }
}

pub fn qp_equal(a: &QuasiPolynomial, b: &QuasiPolynomial) -> bool {
    a.same_function(b)
}

pub fn qp_sub(a: &QuasiPolynomial, b: &QuasiPolynomial) -> QuasiPolynomial {
    a.sub(b)
}

pub fn qp_mul(a: &QuasiPolynomial, b: &QuasiPolynomial) -> QuasiPolynomial {
    a.mul(b)
}

pub fn evaluate(qp: &QuasiPolynomial, t: u64) -> BigRational {
    qp.evaluate(t)
}

pub fn period(qp: &QuasiPolynomial) -> usize {
    qp.period()
}

/// Number of extra samples per residue used to validate an interpolation.
pub const VALIDATION_SAMPLES: usize = 2;

/// Interpolates each constituent from `degree + 1` samples
/// `t = r, r + modulus, ...` and checks it against two further samples.
pub fn interpolate(
    mut counter: impl FnMut(u64) -> Result<u128>,
    modulus: usize,
    degree: usize,
) -> Result<QuasiPolynomial> {
    assert!(modulus > 0);
    let mut constituents = Vec::with_capacity(modulus);
    for r in 0..modulus {
        let ts: Vec<u64> = (0..degree + 1 + VALIDATION_SAMPLES).map(|j| (r + j * modulus) as u64).collect();
        let mut samples = Vec::with_capacity(ts.len());
        for &t in &ts {
            samples.push((rint(t), rint(counter(t)?)));
        }
        let p = Poly::lagrange(&samples[..degree + 1]);
        for (t, y) in &samples[degree + 1..] {
            let predicted = p.eval(t);
            if &predicted != y {
                return Err(Error::DegreeMismatch {
                    residue: r,
                    t: t.to_integer().try_into().unwrap_or(u64::MAX),
                    predicted: ratio_string(&predicted),
                    counted: ratio_string(y),
                });
            }
        }
        constituents.push(p);
    }
    Ok(QuasiPolynomial::new(constituents))
}

/// Modulus used for interpolation: vertices of `P_G` have denominators
/// dividing 4, those of `Q_G` dividing 2.
pub fn default_modulus(polytope: Polytope) -> usize {
    match polytope {
        Polytope::P => 4,
        Polytope::Q => 2,
    }
}

/// Interpolates with degree bound `degree`, lowering it while the
/// validation samples disagree.
pub fn interpolate_shrinking(
    mut counter: impl FnMut(u64) -> Result<u128>,
    modulus: usize,
    degree: usize,
) -> Result<QuasiPolynomial> {
    let mut cache: HashMap<u64, u128> = HashMap::new();
    let mut d = degree;
    loop {
        let attempt = interpolate(
            |t| {
                if let Some(&v) = cache.get(&t) {
                    return Ok(v);
                }
                let v = counter(t)?;
                cache.insert(t, v);
                Ok(v)
            },
            modulus,
            d,
        );
        match attempt {
            Err(Error::DegreeMismatch { .. }) if d > 0 => d -= 1,
            other => return other,
        }
    }
}

/// Ehrhart quasi-polynomial of `P_G` or `Q_G`, from exact counts at
/// `modulus * (m + 3)` dilations. Trees are counted by the tree dynamic
/// program, everything else by variable elimination.
pub fn ehrhart_of(g: &MultiGraph, polytope: Polytope) -> Result<QuasiPolynomial> {
    let stats = g.require_one_three()?;
    let counter = |t: u64| {
        if stats.is_tree {
            lattice::tree_dp_count(g, t, polytope)
        } else {
            lattice::count(g, polytope, t)
        }
    };
    interpolate_shrinking(counter, default_modulus(polytope), g.m())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{caterpillar, dumbbell, star};

    fn dumbbell_even() -> Poly {
        Poly::from_ratios(&[(1, 1), (5, 6), (1, 4), (1, 24)])
    }

    fn dumbbell_odd() -> Poly {
        Poly::from_ratios(&[(1, 4), (11, 24), (1, 4), (1, 24)])
    }

    fn dumbbell_q() -> Poly {
        Poly::from_ratios(&[(1, 1), (11, 6), (1, 1), (1, 6)])
    }

    #[test]
    fn lagrange_recovers_a_cubic() {
        let p = dumbbell_q();
        let pts: Vec<_> = (0..4).map(|t| (rint(t), p.eval_int(t))).collect();
        assert_eq!(Poly::lagrange(&pts), p);
    }

    #[test]
    fn display_matches_the_usual_notation() {
        assert_eq!(dumbbell_q().to_string(), "t³/6 + t² + 11t/6 + 1");
        assert_eq!(dumbbell_odd().to_string(), "t³/24 + t²/4 + 11t/24 + 1/4");
        assert_eq!(Poly::from_ratios(&[(-3, 8)]).to_string(), "-3/8");
        assert_eq!(Poly::from_ratios(&[(1, 2), (-1, 1)]).to_string(), "-t + 1/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn dumbbell_quasi_polynomials() {
        let g = dumbbell();
        let p = ehrhart_of(&g, Polytope::P).unwrap();
        assert_eq!(p.constituents(), &[dumbbell_even(), dumbbell_odd(), dumbbell_even(), dumbbell_odd()]);
        assert_eq!(p.period(), 2);
        let q = ehrhart_of(&g, Polytope::Q).unwrap();
        assert_eq!(q.reduced().constituents(), &[dumbbell_q()]);
        assert_eq!(q.period(), 1);
        assert_eq!(p.evaluate(1), rint(1));
        assert_eq!(p.evaluate(4), rint(11));
    }

    #[test]
    fn star_matches_dumbbell() {
        let s = star();
        let d = dumbbell();
        for polytope in [Polytope::P, Polytope::Q] {
            assert!(qp_equal(&ehrhart_of(&s, polytope).unwrap(), &ehrhart_of(&d, polytope).unwrap()));
        }
    }

    #[test]
    fn single_edge_is_a_floor_function() {
        let qp = ehrhart_of(&caterpillar(2, 0).unwrap(), Polytope::P).unwrap();
        let even = Poly::from_ratios(&[(1, 1), (1, 2)]);
        let odd = Poly::from_ratios(&[(1, 2), (1, 2)]);
        assert_eq!(qp.reduced().constituents(), &[even, odd]);
    }

    #[test]
    fn g11_has_period_four() {
        let qp = ehrhart_of(&caterpillar(1, 1).unwrap(), Polytope::P).unwrap();
        assert_eq!(qp.constituent(0), &Poly::from_ratios(&[(1, 1), (1, 2), (1, 8)]));
        assert_eq!(qp.constituent(2), &Poly::from_ratios(&[(1, 2), (1, 2), (1, 8)]));
        assert_eq!(qp.period(), 4);
    }

    #[test]
    fn constant_counter() {
        let qp = interpolate(|_| Ok(1), 1, 0).unwrap();
        assert_eq!(qp, QuasiPolynomial::constant(rint(1)));
    }

    #[test]
    fn low_degree_bound_is_detected() {
        let err = interpolate(|t| Ok(u128::from(t * t)), 1, 1).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { residue: 0, .. }));
        let qp = interpolate_shrinking(|t| Ok(u128::from(t + 1)), 2, 5).unwrap();
        assert_eq!(qp.period(), 1);
    }

    #[test]
    fn arithmetic() {
        let f = QuasiPolynomial::new(vec![dumbbell_even(), dumbbell_odd()]);
        let one = QuasiPolynomial::constant(rint(1));
        assert_eq!(qp_mul(&f, &one), f);
        let diff = qp_sub(
            &QuasiPolynomial::polynomial(dumbbell_even()),
            &QuasiPolynomial::polynomial(dumbbell_odd()),
        );
        // p0 - p1 = 3t/8 + 3/4
        assert_eq!(diff.constituent(0), &Poly::from_ratios(&[(3, 4), (3, 8)]));
        assert_eq!(evaluate(&diff, 1), rat(9, 8));
        let g = QuasiPolynomial::new(vec![Poly::constant(rint(1)), Poly::constant(rint(2)), Poly::constant(rint(3))]);
        let h = qp_mul(&f, &g);
        assert_eq!(h.modulus(), 6);
        for t in 0..12 {
            assert_eq!(h.evaluate(t), f.evaluate(t) * g.evaluate(t));
        }
    }

    #[test]
    fn json_shape() {
        let qp = QuasiPolynomial::polynomial(dumbbell_even());
        assert_eq!(
            qp.to_json().to_string(),
            r#"{"constituents":[["1","5/6","1/4","1/24"]],"modulus":1}"#
        );
    }
}
