use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} outside the supported range 2..=8")]
    BadDimension(usize),

    #[error("order {0} must be even and at least 2")]
    BadOrder(usize),

    #[error("color {color}: image sequence is not a bijection on 0..{p}")]
    NonBijective { color: usize, p: usize },

    #[error("color {color}: expected {expected} images, found {found}")]
    BadLength {
        color: usize,
        expected: usize,
        found: usize,
    },

    #[error("expected {expected} colors, found {found}")]
    BadColorCount { expected: usize, found: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid jacket cycle: {0}")]
    BadJacket(String),

    #[error("internal mismatch: {0}")]
    InternalMismatch(String),

    #[error("rank of the full incidence matrix ({full}) differs from the gauge-reduced rank ({reduced})")]
    GaugeRankMismatch { full: usize, reduced: usize },

    #[error("simplex {simplex} has a repeated vertex")]
    DegenerateSimplex { simplex: usize },

    #[error("simplex {simplex}: expected {expected} vertices, found {found}")]
    BadSimplex {
        simplex: usize,
        expected: usize,
        found: usize,
    },

    #[error("complex is not closed: facet {facet:?} has {cofaces} cofaces")]
    NotClosed { facet: Vec<u32>, cofaces: usize },

    #[error("complex is not facet-connected")]
    NotConnected,

    #[error("complex is not orientable; its colored graph is not bipartite")]
    NotBipartite,

    #[error("enumeration of {tuples} tuples exceeds the budget of {budget}")]
    BudgetExceeded { tuples: u128, budget: u128 },

    #[error("invariant violated ({what}) by graph:\n{graph}")]
    InvariantViolation { what: String, graph: String },
}
