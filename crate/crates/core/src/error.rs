use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial upper index must be non-negative, got {0}")]
    NegativeUpperIndex(i64),

    #[error("series order must be at least 1")]
    ZeroOrder,

    #[error("series is not invertible: constant term must be +1 or -1")]
    NotInvertible,

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),

    #[error("{name} must be at least {min}, got {value}")]
    OutOfRange {
        name: &'static str,
        min: u64,
        value: u64,
    },

    #[error("identity requires m <= n, got n = {n}, m = {m}")]
    HypothesisViolated { n: u64, m: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
