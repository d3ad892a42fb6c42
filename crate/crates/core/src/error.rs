use thiserror::Error;

/// Errors raised by the library. Every variant names the violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TciError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty word has no cyclic class")]
    EmptyWord,
    #[error("partial trace of an arity-0 element")]
    ArityZero,
    #[error("element is not multilinear in x1..x{k}: {reason}")]
    NotMultilinear { k: usize, reason: String },
    #[error("element is not homogeneous in x1: {0}")]
    NotHomogeneous(String),
    #[error("formal tr(1) must be specialized before evaluation")]
    UnspecializedLambda,
    #[error("matrix dimension {dim} exceeds the cap {cap} (set TCI_MAX_DIM to raise it)")]
    DimensionCap { dim: usize, cap: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("malformed certificate: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, TciError>;
