use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {u}-{v} has invalid weight {w} (weights must be finite and positive)")]
    InvalidWeight { u: usize, v: usize, w: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid size for {generator}: {reason}")]
    InvalidSize {
        generator: &'static str,
        reason: String,
    },

    #[error("graph has {n} vertices, above the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("partition has an empty side (constant +/-1 vector)")]
    ConstantPartition,

    #[error("matrix must have at least one row")]
    EmptyMatrix,

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("eigenpair residual {residual:e} exceeds tolerance {tolerance:e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph must have unit edge weights")]
    NonUnitWeights,

    #[error("Weyl indices ({i}, {j}) invalid for order {n}")]
    InvalidWeylIndex { i: usize, j: usize, n: usize },

    #[error("partition is not a maximum cut: cut {cut} < mcut {mcut}")]
    NotOptimal { cut: f64, mcut: f64 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("prediction violated: {0}")]
    PredictionViolated(String),

    #[error("structural and direct eigenvector checks disagree: {0}")]
    OracleMismatch(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("thread count must be at least 1")]
    InvalidThreads,

    #[error("failed to build thread pool: {0}")]
    ThreadPool(String),
}
