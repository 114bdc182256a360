use thiserror::Error;

/// Domain errors raised by the library. The CLI maps every variant to exit status 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: {reason}")]
    InvalidRank {
        family: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("cannot parse root system type {0:?} (expected e.g. A2, B3, E8, G2)")]
    BadType(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("weight {weight:?} is not dominant")]
    NotDominant { weight: Vec<i64> },
    #[error("weight has length {got}, root system has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("root index {index} out of range ({count} positive roots)")]
    RootIndex { index: usize, count: usize },
    #[error("p = {p} is smaller than the Coxeter number h = {h}")]
    PrimeBelowCoxeter { p: u64, h: u64 },
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
