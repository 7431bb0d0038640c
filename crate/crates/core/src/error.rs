use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition {partition} is not in Γ({m},{n})")]
    NotInGamma { partition: String, m: usize, n: usize },
    #[error("partition {partition} is not splitting for birank ({m},{n})")]
    NotSplitting { partition: String, m: usize, n: usize },
    #[error("invalid rational: {0}")]
    InvalidRational(String),
    #[error("not enough exterior dimensions: need index {needed}, have {available}")]
    InsufficientDims { needed: usize, available: usize },
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("series constant term must be 1, found {0}")]
    ConstantTermNotOne(String),
    #[error("series order {order} too small for degree bounds ({m_max},{n_max})")]
    OrderTooSmall { order: usize, m_max: usize, n_max: usize },
    #[error("no rational function within degree bounds ({m_max},{n_max})")]
    NoRationalFunction { m_max: usize, n_max: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("invalid Hecke parameter {0}")]
    InvalidParameter(String),
    #[error("Hecke parameter mismatch: element uses {element}, symmetry uses {symmetry}")]
    ParameterMismatch { element: String, symmetry: String },
    #[error("strand count {requested} exceeds cap {cap}")]
    StrandCapExceeded { requested: usize, cap: usize },
    #[error("tensor power of dimension {0} too large for a dense matrix")]
    TooLarge(usize),
    #[error("R-matrix has shape {rows}x{cols}, expected {expected}x{expected}")]
    BadShape { rows: usize, cols: usize, expected: usize },
    #[error("axiom failed: {0}")]
    AxiomFailed(String),
    #[error("root-sign condition failed: {0}")]
    RootSign(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
