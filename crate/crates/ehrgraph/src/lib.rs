//! Lattice points of the polytopes `P_G` and `Q_G` attached to
//! `{1,3}`-multigraphs: exact counting, Ehrhart quasi-polynomials, NNI
//! moves, tree geometry, identity checks and pseudocircle arrangements.

pub mod arrangements;
pub mod checks;
pub mod ehrhart;
pub mod error;
pub mod families;
pub mod lattice;
pub mod multigraph;
pub mod nni;
pub mod polytope;
pub mod tree_geometry;

pub use error::{Error, Result};
pub use multigraph::{EdgeSubset, GraphStats, MultiGraph};
pub use polytope::{LinearSystem, PPoint, Polytope, QPoint};
pub use ehrhart::{Poly, QuasiPolynomial};
