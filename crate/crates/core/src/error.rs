use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1} variables")]
    Dimension(usize, usize),
    #[error("inexact division: {0}")]
    Divisibility(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("{0}")]
    Domain(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("index {index} out of range 1..={rank}")]
    Index { index: usize, rank: usize },
    #[error("belt for {0} did not cover all positive roots within {1} rows")]
    Incomplete(String, usize),
    #[error("bijection failure: {0}")]
    Bijection(String),
    #[error("structural error: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;
