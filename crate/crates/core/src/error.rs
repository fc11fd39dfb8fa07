use thiserror::Error;

use crate::superform::Bidegree;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("bidegree mismatch: expected {expected}, got {got}")]
    BidegreeMismatch { expected: Bidegree, got: Bidegree },

    #[error("invalid hook index set {0}")]
    InvalidHookIndexSet(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("component at {bidegree} has dimension {dim}, above the resource cap {cap}")]
    ResourceCapExceeded {
        bidegree: Bidegree,
        dim: usize,
        cap: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
