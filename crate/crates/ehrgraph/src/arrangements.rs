//! Sphere triangulations, their dual cubic graphs, and arrangements of
//! disjoint closed curves crossing each triangle through distinct sides.
//!
//! An integer point `(w, z)` of `tQ_{T*}` puts `w_e` crossing points on
//! triangulation edge `e`. Inside each triangle the points are joined by
//! non-crossing arcs around the corners, `(w_a + w_b − w_c)/2` of them at
//! the corner between sides `a` and `b`; gluing across edges closes them up.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::ehrhart::ehrhart_of;
use crate::error::{Error, Result};
use crate::lattice::{count_q, half_sums};
use crate::multigraph::MultiGraph;
use crate::polytope::{Polytope, QPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    /// Original vertex IDs; vertex `i` internally is `labels[i]`.
    pub labels: Vec<u64>,
    /// Triangles as sorted internal vertex triples, in input order.
    pub triangles: Vec<[usize; 3]>,
    /// Edges as `(min, max)` internal vertex pairs, sorted.
    pub edges: Vec<(usize, usize)>,
    /// The two triangles containing each edge, in increasing order.
    pub edge_triangles: Vec<[usize; 2]>,
}

impl Triangulation {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Side edge IDs of triangle `f`: opposite its first, second and third
    /// vertex.
    pub fn sides(&self, f: usize) -> [usize; 3] {
        let [a, b, c] = self.triangles[f];
        [self.edge_id(b, c).unwrap(), self.edge_id(a, c).unwrap(), self.edge_id(a, b).unwrap()]
    }

    pub fn is_tetrahedron(&self) -> bool {
        self.vertex_count() == 4 && self.face_count() == 4
    }
}

/// Parses one triangle per line, `a b c` vertex IDs; `#` starts a comment.
pub fn load_triangulation(text: &str) -> Result<Triangulation> {
    let mut raw: Vec<[u64; 3]> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let ids: Vec<u64> = line
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| Error::Parse { line: i + 1, msg: format!("`{x}` is not a vertex ID") }))
            .collect::<Result<_>>()?;
        if ids.len() != 3 {
            return Err(Error::Parse { line: i + 1, msg: "expected three vertex IDs".into() });
        }
        if ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2] {
            return Err(Error::NotSphere(format!("line {}: degenerate triangle", i + 1)));
        }
        raw.push([ids[0], ids[1], ids[2]]);
    }
    if raw.is_empty() {
        return Err(Error::NotSphere("no triangles".into()));
    }
    let labels: Vec<u64> = raw.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let index = |x: u64| labels.binary_search(&x).unwrap();
    let triangles: Vec<[usize; 3]> = raw
        .iter()
        .map(|t| {
            let mut v = [index(t[0]), index(t[1]), index(t[2])];
            v.sort_unstable();
            v
        })
        .collect();

    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (f, &[a, b, c]) in triangles.iter().enumerate() {
        for e in [(a, b), (a, c), (b, c)] {
            by_edge.entry(e).or_default().push(f);
        }
    }
    for (&(u, v), fs) in &by_edge {
        if fs.len() != 2 {
            return Err(Error::NotSphere(format!(
                "edge {}-{} lies in {} triangles",
                labels[u],
                labels[v],
                fs.len()
            )));
        }
    }
    let (nv, ne, nf) = (labels.len() as i64, by_edge.len() as i64, triangles.len() as i64);
    if nv - ne + nf != 2 {
        return Err(Error::NotSphere(format!("Euler characteristic {} != 2", nv - ne + nf)));
    }
    // Each vertex link must be one cycle, else the surface is pinched.
    for v in 0..labels.len() {
        let link: Vec<(usize, usize)> = triangles
            .iter()
            .filter(|t| t.contains(&v))
            .map(|t| {
                let o: Vec<usize> = t.iter().copied().filter(|&x| x != v).collect();
                (o[0], o[1])
            })
            .collect();
        if !link_is_cycle(&link) {
            return Err(Error::NotSphere(format!("link of vertex {} is not a cycle", labels[v])));
        }
    }
    let edges: Vec<(usize, usize)> = by_edge.keys().copied().collect();
    let edge_triangles = by_edge.values().map(|fs| [fs[0], fs[1]]).collect();
    Ok(Triangulation { labels, triangles, edges, edge_triangles })
}

fn link_is_cycle(link: &[(usize, usize)]) -> bool {
    if link.is_empty() {
        return false;
    }
    let mut used = vec![false; link.len()];
    used[0] = true;
    let (start, mut cur) = link[0];
    let mut steps = 1;
    while cur != start {
        let Some(i) = (0..link.len()).find(|&i| !used[i] && (link[i].0 == cur || link[i].1 == cur)) else {
            return false;
        };
        used[i] = true;
        cur = if link[i].0 == cur { link[i].1 } else { link[i].0 };
        steps += 1;
    }
    steps == link.len()
}

/// One node per triangle, one edge per triangulation edge (same order).
pub fn dual_graph(tri: &Triangulation) -> MultiGraph {
    let edges = tri.edge_triangles.iter().map(|&[f, g]| (f, g)).collect();
    MultiGraph::new(tri.face_count(), edges).expect("dual of a valid triangulation")
}

pub fn count_arrangements(tri: &Triangulation, t: u64) -> Result<u128> {
    count_q(&dual_graph(tri), t)
}

/// Observed period of `t -> count_arrangements(tri, t)`.
pub fn arrangement_period(tri: &Triangulation) -> Result<usize> {
    Ok(ehrhart_of(&dual_graph(tri), Polytope::Q)?.period())
}

/// Arc counts in one triangle: `corners[i]` arcs go around vertex
/// `triangles[f][i]`, joining the two sides that meet there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSystem {
    pub triangle: usize,
    pub sides: [usize; 3],
    pub weights: [i64; 3],
    pub corners: [i64; 3],
}

impl ArcSystem {
    /// Arcs ending on each side; equals the side weight when the system is
    /// consistent.
    pub fn side_totals(&self) -> [i64; 3] {
        // Side i is opposite corner i and meets the other two corners.
        let c = self.corners;
        [c[1] + c[2], c[0] + c[2], c[0] + c[1]]
    }

    pub fn traversals(&self) -> i64 {
        self.corners.iter().sum()
    }
}

/// A crossing point: the `index`-th of the points on an edge, counted from
/// the smaller endpoint.
pub type CrossPoint = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arc {
    pub triangle: usize,
    /// Internal vertex the arc turns around.
    pub corner: usize,
    /// Nesting level around the corner, 0 innermost.
    pub level: usize,
    pub from: CrossPoint,
    pub to: CrossPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub point: QPoint,
    pub order: i64,
    pub systems: Vec<ArcSystem>,
    pub arcs: Vec<Arc>,
    /// Closed curves as cyclic lists of arc indices.
    pub curves: Vec<Vec<usize>>,
}

/// Index on edge `e` of the `level`-th point nearest vertex `x`.
fn nearest(tri: &Triangulation, w: &[i64], e: usize, x: usize, level: usize) -> CrossPoint {
    let (p, _) = tri.edges[e];
    let n = w[e] as usize;
    if p == x {
        (e, level)
    } else {
        (e, n - 1 - level)
    }
}

pub fn realize_arrangement(tri: &Triangulation, point: &QPoint) -> Result<Realization> {
    let m = tri.edge_count();
    if point.w.len() != m || point.z.len() != tri.face_count() || point.w.iter().any(|&x| x < 0) {
        return Err(Error::PointNotInQ);
    }
    let dual = dual_graph(tri);
    if half_sums(&dual, &point.w) != point.z {
        return Err(Error::PointNotInQ);
    }
    let mut systems = Vec::new();
    let mut arcs = Vec::new();
    for f in 0..tri.face_count() {
        let sides = tri.sides(f);
        let weights = sides.map(|e| point.w[e]);
        let s: i64 = weights.iter().sum();
        if s % 2 != 0 || weights.iter().any(|&x| 2 * x > s) {
            return Err(Error::PointNotInQ);
        }
        // Corner i lies between the two sides other than side i.
        let corners = [0, 1, 2].map(|i| s / 2 - weights[i]);
        let sys = ArcSystem { triangle: f, sides, weights, corners };
        for i in 0..3 {
            let x = tri.triangles[f][i];
            let (s1, s2) = (sides[(i + 1) % 3], sides[(i + 2) % 3]);
            let (a, b) = (s1.min(s2), s1.max(s2));
            for level in 0..corners[i] as usize {
                arcs.push(Arc {
                    triangle: f,
                    corner: x,
                    level,
                    from: nearest(tri, &point.w, a, x, level),
                    to: nearest(tri, &point.w, b, x, level),
                });
            }
        }
        systems.push(sys);
    }
    arcs.sort();
    let curves = trace_curves(&arcs)?;
    let order = point.z.iter().copied().max().unwrap_or(0);
    Ok(Realization { point: point.clone(), order, systems, arcs, curves })
}

/// Joins arcs into closed curves, each starting from its smallest arc.
fn trace_curves(arcs: &[Arc]) -> Result<Vec<Vec<usize>>> {
    let mut at: BTreeMap<CrossPoint, Vec<usize>> = BTreeMap::new();
    for (i, a) in arcs.iter().enumerate() {
        at.entry(a.from).or_default().push(i);
        at.entry(a.to).or_default().push(i);
    }
    if let Some((p, _)) = at.iter().find(|(_, v)| v.len() != 2) {
        return Err(Error::NotSphere(format!("crossing point {p:?} is not matched exactly once")));
    }
    let mut used = vec![false; arcs.len()];
    let mut curves = Vec::new();
    for start in 0..arcs.len() {
        if used[start] {
            continue;
        }
        let mut curve = vec![start];
        used[start] = true;
        let mut cur = start;
        let mut end = arcs[start].to;
        loop {
            let pair = &at[&end];
            let next = if pair[0] == cur { pair[1] } else { pair[0] };
            if next == start {
                break;
            }
            used[next] = true;
            curve.push(next);
            end = if arcs[next].from == end { arcs[next].to } else { arcs[next].from };
            cur = next;
        }
        curves.push(curve);
    }
    Ok(curves)
}

/// Parses `--point` text: `w1,...,wm` or `w1,...,wm,z1,...,zF`.
pub fn parse_point(tri: &Triangulation, text: &str) -> Result<QPoint> {
    let nums: Vec<i64> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::Parse { line: 1, msg: format!("`{s}` is not an integer") }))
        .collect::<Result<_>>()?;
    let (m, f) = (tri.edge_count(), tri.face_count());
    let dual = dual_graph(tri);
    if nums.len() == m {
        let z = half_sums(&dual, &nums);
        return Ok(QPoint { w: nums, z });
    }
    if nums.len() == m + f {
        return Ok(QPoint { w: nums[..m].to_vec(), z: nums[m..].to_vec() });
    }
    Err(Error::DimensionMismatch { expected: m, got: nums.len() })
}

/// Vertex coordinates for drawing, indexed by internal vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct Layout {
    pub coords: Vec<(f64, f64)>,
}

impl Layout {
    /// Outer triangle `{0,1,2}` with the fourth vertex in the middle.
    pub fn tetrahedron() -> Self {
        Layout { coords: vec![(200.0, 30.0), (30.0, 330.0), (370.0, 330.0), (200.0, 230.0)] }
    }

    /// One `id x y` line per vertex, using the triangulation's vertex IDs.
    pub fn parse(tri: &Triangulation, text: &str) -> Result<Self> {
        let mut coords = vec![None; tri.vertex_count()];
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse { line: i + 1, msg: "expected `id x y`".into() };
            if parts.len() != 3 {
                return Err(bad());
            }
            let id: u64 = parts[0].parse().map_err(|_| bad())?;
            let x: f64 = parts[1].parse().map_err(|_| bad())?;
            let y: f64 = parts[2].parse().map_err(|_| bad())?;
            let v = tri.labels.binary_search(&id).map_err(|_| bad())?;
            coords[v] = Some((x, y));
        }
        let coords: Option<Vec<(f64, f64)>> = coords.into_iter().collect();
        coords.map(|coords| Layout { coords }).ok_or(Error::MissingLayout)
    }
}

fn inside(p: (f64, f64), a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> bool {
    let cross = |o: (f64, f64), u: (f64, f64), v: (f64, f64)| (u.0 - o.0) * (v.1 - o.1) - (u.1 - o.1) * (v.0 - o.0);
    let (d1, d2, d3) = (cross(a, b, p), cross(b, c, p), cross(c, a, p));
    (d1 > 0.0 && d2 > 0.0 && d3 > 0.0) || (d1 < 0.0 && d2 < 0.0 && d3 < 0.0)
}

/// The triangle drawn as the unbounded face: the one containing another
/// vertex.
fn outer_triangle(tri: &Triangulation, layout: &Layout) -> Option<usize> {
    let c = &layout.coords;
    (0..tri.face_count()).find(|&f| {
        let [a, b, d] = tri.triangles[f];
        (0..tri.vertex_count()).any(|v| !tri.triangles[f].contains(&v) && inside(c[v], c[a], c[b], c[d]))
    })
}

fn point_xy(tri: &Triangulation, layout: &Layout, w: &[i64], cp: CrossPoint) -> (f64, f64) {
    let (e, i) = cp;
    let (p, q) = tri.edges[e];
    let (a, b) = (layout.coords[p], layout.coords[q]);
    let s = (i as f64 + 1.0) / (w[e] as f64 + 1.0);
    (a.0 + s * (b.0 - a.0), a.1 + s * (b.1 - a.1))
}

const PALETTE: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"];

/// SVG drawing of the triangulation and, if given, the arcs coloured by
/// curve. Without a layout only the tetrahedron can be drawn.
pub fn emit_svg(tri: &Triangulation, realization: Option<&Realization>, layout: Option<&Layout>) -> Result<String> {
    let builtin;
    let layout = match layout {
        Some(l) => l,
        None if tri.is_tetrahedron() => {
            builtin = Layout::tetrahedron();
            &builtin
        }
        None => return Err(Error::MissingLayout),
    };
    if layout.coords.len() != tri.vertex_count() {
        return Err(Error::MissingLayout);
    }
    let outer = outer_triangle(tri, layout);
    let xs = layout.coords.iter().map(|c| c.0);
    let ys = layout.coords.iter().map(|c| c.1);
    let (x0, x1) = (xs.clone().fold(f64::INFINITY, f64::min), xs.fold(f64::NEG_INFINITY, f64::max));
    let (y0, y1) = (ys.clone().fold(f64::INFINITY, f64::min), ys.fold(f64::NEG_INFINITY, f64::max));
    let pad = 0.25 * (x1 - x0).max(y1 - y0).max(1.0);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.2} {:.2} {:.2} {:.2}">"#,
        x0 - pad,
        y0 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    )
    .unwrap();
    writeln!(s, r#"<g stroke="black" stroke-width="1.5">"#).unwrap();
    for &(u, v) in &tri.edges {
        let (a, b) = (layout.coords[u], layout.coords[v]);
        writeln!(s, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    if let Some(r) = realization {
        let mut colour = vec![0usize; r.arcs.len()];
        for (ci, curve) in r.curves.iter().enumerate() {
            for &a in curve {
                colour[a] = ci;
            }
        }
        writeln!(s, r#"<g fill="none" stroke-width="1.2">"#).unwrap();
        for (i, arc) in r.arcs.iter().enumerate() {
            let p = point_xy(tri, layout, &r.point.w, arc.from);
            let q = point_xy(tri, layout, &r.point.w, arc.to);
            let stroke = PALETTE[colour[i] % PALETTE.len()];
            if Some(arc.triangle) == outer {
                // Go around the corner outside the drawn triangle.
                let c = layout.coords[arc.corner];
                let reach = 0.9 * dist(p, c).max(dist(q, c)) + 8.0 * (arc.level as f64 + 1.0);
                let cp1 = away(c, p, reach);
                let cp2 = away(c, q, reach);
                let mid = opposite_of_centroid(tri, layout, arc.triangle, c, reach);
                writeln!(
                    s,
                    r#"<path d="M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}" stroke="{stroke}"/>"#,
                    p.0, p.1, cp1.0, cp1.1, mid.0, mid.1, cp2.0, cp2.1, q.0, q.1
                )
                .unwrap();
            } else {
                writeln!(s, r#"<path d="M {:.2} {:.2} L {:.2} {:.2}" stroke="{stroke}"/>"#, p.0, p.1, q.0, q.1).unwrap();
            }
        }
        writeln!(s, "</g>").unwrap();
    }
    writeln!(s, r#"<g fill="black" font-size="14" font-family="sans-serif">"#).unwrap();
    for (v, c) in layout.coords.iter().enumerate() {
        writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="3"/>"#, c.0, c.1).unwrap();
        writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, c.0 + 6.0, c.1 - 6.0, tri.labels[v]).unwrap();
    }
    writeln!(s, "</g>\n</svg>").unwrap();
    Ok(s)
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt()
}

/// `p` pushed further from `c` to distance `reach`.
fn away(c: (f64, f64), p: (f64, f64), reach: f64) -> (f64, f64) {
    let d = dist(c, p).max(1e-9);
    (c.0 + (p.0 - c.0) / d * reach, c.1 + (p.1 - c.1) / d * reach)
}

/// The point at distance `reach` from corner `c`, pointing away from the
/// drawn triangle's centroid.
fn opposite_of_centroid(tri: &Triangulation, layout: &Layout, f: usize, c: (f64, f64), reach: f64) -> (f64, f64) {
    let [a, b, d] = tri.triangles[f];
    let g = (
        (layout.coords[a].0 + layout.coords[b].0 + layout.coords[d].0) / 3.0,
        (layout.coords[a].1 + layout.coords[b].1 + layout.coords[d].1) / 3.0,
    );
    let v = (c.0 - g.0, c.1 - g.1);
    let n = (v.0 * v.0 + v.1 * v.1).sqrt().max(1e-9);
    (c.0 + v.0 / n * reach, c.1 + v.1 / n * reach)
}

pub const TETRAHEDRON: &str = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n";

pub const OCTAHEDRON: &str = "0 2 4\n0 2 5\n0 3 4\n0 3 5\n1 2 4\n1 2 5\n1 3 4\n1 3 5\n";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_q_points;
    use crate::multigraph::{are_isomorphic, cube, enumerate_internally_eulerian, k4};

    fn tet() -> Triangulation {
        load_triangulation(TETRAHEDRON).unwrap()
    }

    #[test]
    fn loading() {
        let t = tet();
        assert_eq!((t.vertex_count(), t.edge_count(), t.face_count()), (4, 6, 4));
        let o = load_triangulation(OCTAHEDRON).unwrap();
        assert_eq!((o.vertex_count(), o.edge_count(), o.face_count()), (6, 12, 8));
        let bad = "0 1 2\n0 1 3\n0 1 4\n";
        assert!(matches!(load_triangulation(bad), Err(Error::NotSphere(_))));
        assert!(matches!(load_triangulation("0 1 2\n"), Err(Error::NotSphere(_))));
        assert!(matches!(load_triangulation("0 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn duals() {
        let d = dual_graph(&tet());
        assert!(are_isomorphic(&d, &k4()).unwrap());
        let o = dual_graph(&load_triangulation(OCTAHEDRON).unwrap());
        assert!(are_isomorphic(&o, &cube()).unwrap());
        assert!(o.stats().is_cubic);
        let s = d.stats();
        assert_eq!(s.k, 6 - 4 + 1);
        assert_eq!(enumerate_internally_eulerian(&d).unwrap().len(), 8);
    }

    #[test]
    fn counts() {
        let t = tet();
        assert_eq!(count_arrangements(&t, 0).unwrap(), 1);
        assert_eq!(count_arrangements(&t, 1).unwrap(), 8);
        assert_eq!(arrangement_period(&t).unwrap(), 1);
        for s in 0..=3 {
            let brute = enumerate_q_points(&dual_graph(&t), s).unwrap().len() as u128;
            assert_eq!(count_arrangements(&t, s).unwrap(), brute);
        }
    }

    #[test]
    fn zero_point_is_empty() {
        let t = tet();
        let p = parse_point(&t, "0,0,0,0,0,0").unwrap();
        let r = realize_arrangement(&t, &p).unwrap();
        assert!(r.arcs.is_empty() && r.curves.is_empty());
        assert_eq!(r.order, 0);
    }

    #[test]
    fn every_small_point_closes_up() {
        let t = tet();
        let d = dual_graph(&t);
        for s in 0..=3 {
            for p in enumerate_q_points(&d, s).unwrap() {
                let r = realize_arrangement(&t, &p).unwrap();
                assert!(r.order <= s as i64);
                for sys in &r.systems {
                    assert_eq!(sys.side_totals(), sys.weights);
                    assert!(sys.corners.iter().all(|&c| c >= 0));
                }
                let total: usize = r.curves.iter().map(Vec::len).sum();
                assert_eq!(total, r.arcs.len());
                let crossings: i64 = p.w.iter().sum();
                assert_eq!(2 * crossings, 2 * r.arcs.len() as i64);
            }
        }
    }

    #[test]
    fn all_twos() {
        let t = tet();
        let p = parse_point(&t, "2,2,2,2,2,2").unwrap();
        assert_eq!(p.z, vec![3, 3, 3, 3]);
        let r = realize_arrangement(&t, &p).unwrap();
        assert_eq!(r.order, 3);
        assert_eq!(r.arcs.len(), 12);
        assert!(realize_arrangement(&t, &parse_point(&t, "1,0,0,0,0,0").unwrap()).is_err());
    }

    #[test]
    fn svg_is_deterministic() {
        let t = tet();
        let r = realize_arrangement(&t, &parse_point(&t, "2,2,2,2,2,2").unwrap()).unwrap();
        let a = emit_svg(&t, Some(&r), None).unwrap();
        let b = emit_svg(&t, Some(&r), None).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg") && a.contains("<path"));
        let empty = emit_svg(&t, None, None).unwrap();
        assert!(!empty.contains("<path"));
        let o = load_triangulation(OCTAHEDRON).unwrap();
        assert_eq!(emit_svg(&o, None, None), Err(Error::MissingLayout));
        let layout = Layout::parse(&t, "0 0 0\n1 10 0\n2 5 9\n3 5 3\n").unwrap();
        assert!(emit_svg(&t, Some(&r), Some(&layout)).is_ok());
    }
}
