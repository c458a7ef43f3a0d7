use thiserror::Error;

/// Errors shared across the symbol, star-product, grid and operator layers.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {0} is odd; phase-space operations need d = 2n")]
    OddDimension(usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("unknown ordering preset `{0}`")]
    UnknownPreset(String),
    #[error("unsupported dimension {dim}: {detail}")]
    UnsupportedDimension { dim: usize, detail: &'static str },
    #[error("grids are incompatible: {0}")]
    GridMismatch(&'static str),
    #[error("grid axis length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("hbar mismatch between operands")]
    HbarMismatch,
    #[error("protected block is empty: cutoff {cutoff} too small for degree {degree}")]
    EmptyProtectedBlock { cutoff: usize, degree: usize },
    #[error("cone has no interior point")]
    EmptyCone,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("result inconclusive: {0}")]
    Inconclusive(String),
    #[error("quadrature under-resolved: collocation residual {0:.3e}")]
    UnderResolved(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
