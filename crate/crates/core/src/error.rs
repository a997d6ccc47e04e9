use thiserror::Error;

use crate::partition::Partition;

/// Failures reported by the library.
///
/// Every variant is a precondition violation on the caller's side except
/// [`Error::NotSchurIntegral`] and [`Error::Inconsistent`], which indicate
/// that two computation routes disagreed and should never surface.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be non-increasing non-negative integers")]
    InvalidPartition(String),

    #[error("inner partition {inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("skew shape {0} is not a border strip")]
    NotABorderStrip(String),

    #[error("skew shape has {actual} cells, expected {expected}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("weights differ: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("bad transform indices ({first}, {second}) for a {dim}x{dim} matrix")]
    BadIndices { first: usize, second: usize, dim: usize },

    #[error("bad shape for the Merca recursion: {0}")]
    BadShape(String),

    #[error("coefficient of s{partition} is {value}, not an integer")]
    NotSchurIntegral { partition: Partition, value: String },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
