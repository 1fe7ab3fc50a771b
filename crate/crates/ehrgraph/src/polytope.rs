//! H-representations of `tP_G` and `tQ_G` with the dilation `t` kept
//! symbolic: every right-hand side is an affine form `a*t + b`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polytope {
    P,
    Q,
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polytope::P => "P",
            Polytope::Q => "Q",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Edge(usize),
    Node(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
}

/// `a*t + b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub a: BigRational,
    pub b: BigRational,
}

impl Affine {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Affine { a, b }
    }

    pub fn constant(b: i64) -> Self {
        Affine { a: BigRational::zero(), b: int(b) }
    }

    pub fn at(&self, t: &BigRational) -> BigRational {
        &self.a * t + &self.b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Row {
    pub coeffs: Vec<BigRational>,
    pub rel: Relation,
    pub rhs: Affine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub vars: Vec<Var>,
    pub rows: Vec<Row>,
}

/// Integer point of `tP_G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PPoint {
    pub w: Vec<i64>,
}

/// Integer point of `tQ_G`: edge weights `w` and one `z` per internal node
/// (in increasing node order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoint {
    pub w: Vec<i64>,
    pub z: Vec<i64>,
}

impl QPoint {
    /// Concatenation `(w, z)` in system variable order.
    pub fn coords(&self) -> Vec<i64> {
        self.w.iter().chain(&self.z).copied().collect()
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}), ({})", join(&self.w), join(&self.z))
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Edges forming a component on their own (both ends are leaves).
pub fn isolated_edges(g: &MultiGraph) -> Vec<usize> {
    let deg = g.degrees();
    (0..g.m())
        .filter(|&e| {
            let (a, b) = g.endpoints(e);
            a != b && deg[a] == 1 && deg[b] == 1
        })
        .collect()
}

struct Builder {
    width: usize,
    rows: Vec<Row>,
    seen: HashSet<Row>,
}

impl Builder {
    fn push(&mut self, coeffs: Vec<i64>, rel: Relation, rhs: Affine) {
        if coeffs.iter().all(|&c| c == 0) {
            return;
        }
        let row = Row { coeffs: coeffs.into_iter().map(int).collect(), rel, rhs };
        if self.seen.insert(row.clone()) {
            self.rows.push(row);
        }
    }

    fn triangle_rows(&mut self, triple: &[usize]) {
        for x in 0..3 {
            let mut c = vec![0i64; self.width];
            for (y, &e) in triple.iter().enumerate() {
                c[e] += if y == x { 1 } else { -1 };
            }
            self.push(c, Relation::Le, Affine::constant(0));
        }
    }
}

fn build(g: &MultiGraph, polytope: Polytope) -> Result<LinearSystem> {
    g.require_one_three()?;
    let m = g.m();
    let internal = g.internal_nodes();
    let mut vars: Vec<Var> = (0..m).map(Var::Edge).collect();
    if polytope == Polytope::Q {
        vars.extend(internal.iter().map(|&v| Var::Node(v)));
    }
    let width = vars.len();
    let mut b = Builder { width, rows: Vec::new(), seen: HashSet::new() };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for (zi, &v) in internal.iter().enumerate() {
        let triple = g.incidence(v);
        b.triangle_rows(&triple);
        let mut sum = vec![0i64; width];
        for &e in &triple {
            sum[e] += 1;
        }
        match polytope {
            Polytope::P => b.push(sum, Relation::Le, Affine::new(BigRational::one(), BigRational::zero())),
            Polytope::Q => {
                sum[m + zi] = -2;
                b.push(sum, Relation::Eq, Affine::constant(0));
                let mut z = vec![0i64; width];
                z[m + zi] = 1;
                b.push(z, Relation::Le, Affine::new(BigRational::one(), BigRational::zero()));
            }
        }
    }
    for e in isolated_edges(g) {
        let mut lo = vec![0i64; width];
        lo[e] = -1;
        b.push(lo, Relation::Le, Affine::constant(0));
        let mut hi = vec![0i64; width];
        hi[e] = 1;
        let slope = match polytope {
            Polytope::P => half.clone(),
            Polytope::Q => BigRational::one(),
        };
        b.push(hi, Relation::Le, Affine::new(slope, BigRational::zero()));
    }
    Ok(LinearSystem { vars, rows: b.rows })
}

/// Triangle and perimeter rows at every internal node; `0 <= w <= t/2` for
/// an edge that is a component by itself.
pub fn build_p_system(g: &MultiGraph) -> Result<LinearSystem> {
    build(g, Polytope::P)
}

/// Triangle rows, `sum = 2 z_v` and `z_v <= t` at every internal node;
/// `0 <= w <= t` for an isolated edge. Variables are the edges followed by
/// the internal nodes.
pub fn build_q_system(g: &MultiGraph) -> Result<LinearSystem> {
    build(g, Polytope::Q)
}

pub fn build_system(g: &MultiGraph, polytope: Polytope) -> Result<LinearSystem> {
    build(g, polytope)
}

impl LinearSystem {
    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    /// Exact membership test of an integer point at integer dilation `t`.
    pub fn contains(&self, t: i64, point: &[i64]) -> Result<bool> {
        let t = int(t);
        let point: Vec<BigRational> = point.iter().map(|&x| int(x)).collect();
        self.contains_rational(&t, &point)
    }

    pub fn contains_rational(&self, t: &BigRational, point: &[BigRational]) -> Result<bool> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch { expected: self.vars.len(), got: point.len() });
        }
        Ok(self.rows.iter().all(|row| {
            let lhs: BigRational = row
                .coeffs
                .iter()
                .zip(point)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, x)| c * x)
                .fold(BigRational::zero(), |acc, x| acc + x);
            let rhs = row.rhs.at(t);
            match row.rel {
                Relation::Le => lhs <= rhs,
                Relation::Eq => lhs == rhs,
            }
        }))
    }

    /// Plain-text export at a fixed dilation: one row per line, the
    /// coefficients, then `<=` or `=`, then the right-hand side.
    pub fn to_text(&self, t: i64) -> String {
        let t = int(t);
        let mut out = String::new();
        for row in &self.rows {
            let cs: Vec<String> = row.coeffs.iter().map(|c| c.to_string()).collect();
            let rel = match row.rel {
                Relation::Le => "<=",
                Relation::Eq => "=",
            };
            out.push_str(&format!("{} {} {}\n", cs.join(" "), rel, row.rhs.at(&t)));
        }
        out
    }

    /// Human-readable rendering with symbolic `t`, e.g. `2w0 + w2 <= t`.
    pub fn describe(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|row| {
                let mut terms = String::new();
                for (c, var) in row.coeffs.iter().zip(&self.vars) {
                    if c.is_zero() {
                        continue;
                    }
                    let name = match var {
                        Var::Edge(e) => format!("w{e}"),
                        Var::Node(v) => format!("z{v}"),
                    };
                    let mag = c.abs();
                    let coef = if mag.is_one() { String::new() } else { mag.to_string() };
                    if terms.is_empty() {
                        if c.is_negative() {
                            terms.push('-');
                        }
                    } else {
                        terms.push_str(if c.is_negative() { " - " } else { " + " });
                    }
                    terms.push_str(&coef);
                    terms.push_str(&name);
                }
                let rel = match row.rel {
                    Relation::Le => "<=",
                    Relation::Eq => "=",
                };
                let rhs = match (row.rhs.a.is_zero(), row.rhs.b.is_zero()) {
                    (true, _) => row.rhs.b.to_string(),
                    (false, true) if row.rhs.a.is_one() => "t".to_string(),
                    (false, true) => format!("{}t", row.rhs.a),
                    (false, false) => format!("{}t + {}", row.rhs.a, row.rhs.b),
                };
                format!("{terms} {rel} {rhs}")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{dumbbell, k4, single_edge, star, theta};

    fn rows_as_sets(sys: &LinearSystem) -> Vec<String> {
        let mut v = sys.describe();
        v.sort();
        v
    }

    #[test]
    fn dumbbell_p_rows() {
        let sys = build_p_system(&dumbbell()).unwrap();
        let mut want = vec![
            "-2w0 + w2 <= 0",
            "-w2 <= 0",
            "2w0 + w2 <= t",
            "-2w1 + w2 <= 0",
            "2w1 + w2 <= t",
        ];
        want.sort();
        assert_eq!(rows_as_sets(&sys), want);
    }

    #[test]
    fn star_p_rows() {
        let sys = build_p_system(&star()).unwrap();
        let mut want = vec![
            "w0 - w1 - w2 <= 0",
            "-w0 + w1 - w2 <= 0",
            "-w0 - w1 + w2 <= 0",
            "w0 + w1 + w2 <= t",
        ];
        want.sort();
        assert_eq!(rows_as_sets(&sys), want);
    }

    #[test]
    fn single_edge_boxes() {
        let p = build_p_system(&single_edge()).unwrap();
        assert_eq!(rows_as_sets(&p), vec!["-w0 <= 0", "w0 <= 1/2t"]);
        let q = build_q_system(&single_edge()).unwrap();
        assert_eq!(rows_as_sets(&q), vec!["-w0 <= 0", "w0 <= t"]);
    }

    #[test]
    fn q_systems_have_node_variables() {
        let q = build_q_system(&dumbbell()).unwrap();
        assert_eq!(q.vars, vec![Var::Edge(0), Var::Edge(1), Var::Edge(2), Var::Node(0), Var::Node(1)]);
        assert!(q.describe().contains(&"2w0 + w2 - 2z0 = 0".to_string()));
        assert!(q.describe().contains(&"z1 <= t".to_string()));
        let q = build_q_system(&star()).unwrap();
        assert_eq!(q.dim(), 4);
    }

    #[test]
    fn membership_examples() {
        let q = build_q_system(&dumbbell()).unwrap();
        assert!(q.contains(1, &[0, 1, 0, 0, 1]).unwrap());
        for z in 0..=2 {
            for z2 in 0..=2 {
                assert!(!q.contains(1, &[1, 1, 1, z, z2]).unwrap());
            }
        }
        for sys in [q, build_p_system(&k4()).unwrap(), build_q_system(&theta()).unwrap()] {
            assert!(sys.contains(0, &vec![0; sys.dim()]).unwrap());
        }
        let p = build_p_system(&dumbbell()).unwrap();
        assert_eq!(p.contains(1, &[0, 0]), Err(Error::DimensionMismatch { expected: 3, got: 2 }));
    }

    #[test]
    fn rejects_non_one_three() {
        assert!(matches!(build_p_system(&crate::multigraph::cycle(3)), Err(Error::NotOneThree { .. })));
    }

    #[test]
    fn text_export_instantiates_t() {
        let p = build_p_system(&single_edge()).unwrap();
        assert_eq!(p.to_text(4), "-1 <= 0\n1 <= 2\n");
    }
}
