use thiserror::Error;

/// Errors raised by the state, entropy, and correlation routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |M - M^dagger| = {0:e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    InvalidTrace(f64),

    #[error("not positive semidefinite (min eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("eigenvalue {0:e} is below the clamp window")]
    NegativeEigenvalue(f64),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(String, String),

    #[error("unsupported party dimensions {0}x{1}")]
    UnsupportedDims(usize, usize),

    #[error("invalid state spec: {0}")]
    InvalidSpec(String),

    /// `at` is either `line L, column C` or a field path such as `dense.re`.
    #[error("parse error at {at}: {message}")]
    Parse { at: String, message: String },

    #[error("state violates density-matrix invariants: {0}")]
    InvariantViolation(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("sweep row {index} (seed {seed:#018x}) failed: {source}")]
    Sweep {
        index: u64,
        seed: u64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
