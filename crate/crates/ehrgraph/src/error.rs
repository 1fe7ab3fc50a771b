use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("node {node} has degree {degree}, expected 1 or 3")]
    NotOneThree { node: usize, degree: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no caterpillar with h={h}, k={k} (need h+k >= 2)")]
    InvalidShape { h: usize, k: usize },
    #[error("{what} exceeds the limit of {limit}")]
    TooLarge { what: &'static str, limit: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("enumeration budget of {budget} steps exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("edge set is not internally Eulerian")]
    NotEulerian,
    #[error("graph is not a {{1,3}}-tree")]
    NotTree,
    #[error("degree bound too small: residue {residue}, t={t}: predicted {predicted}, counted {counted}")]
    DegreeMismatch {
        residue: usize,
        t: u64,
        predicted: String,
        counted: String,
    },
    #[error("invalid NNI trail: {0}")]
    InvalidTrail(String),
    #[error("point is not an integer point of any dilation of Q")]
    PointNotInQ,
    #[error("could not reach the caterpillar by NNI moves")]
    CanonicalizationFailed,
    #[error("odd number of leaves selected")]
    OddLeafSet,
    #[error("point lies outside the polytope")]
    PointOutside,
    #[error("not a triangulated sphere: {0}")]
    NotSphere(String),
    #[error("layout does not cover every vertex")]
    MissingLayout,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("arithmetic overflow while counting")]
    Overflow,
}
