use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid generator subset: {0}")]
    InvalidSubset(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid margin matrix: {0}")]
    InvalidMatrix(String),

    #[error("n = {n} is outside the supported range 1..={max} for {what} (raise the limit to override)")]
    OutOfRange { n: usize, max: usize, what: &'static str },

    #[error("coefficient overflow")]
    Overflow,

    #[error("export failed: {0}")]
    Export(String),

    #[error("{x} is not in the double set X_J^-1 ∩ X_K")]
    NotInDoubleSet { x: String },
}

pub type Result<T> = std::result::Result<T, Error>;
