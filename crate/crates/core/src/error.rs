use thiserror::Error;

/// Errors raised by the laboratory.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input must be a positive integer, got 0")]
    ZeroInput,

    #[error("input {0} exceeds the supported maximum 2^63 - 1")]
    InputTooLarge(u64),

    #[error("invalid range [{lo}, {hi}): {reason}")]
    InvalidRange { lo: u64, hi: u64, reason: &'static str },

    #[error("base primes complete only up to {limit} cannot certify cofactor {residual} of {n}")]
    IncompleteBasePrimes { n: u64, residual: u64, limit: u64 },

    #[error("grid point {x} is below the minimum {min}")]
    GridBelowMinimum { x: u64, min: u64 },

    #[error("grid point {x} exceeds x_max = {x_max}")]
    GridAboveMax { x: u64, x_max: u64 },

    #[error("grid must be strictly increasing ({prev} then {next})")]
    GridNotIncreasing { prev: u64, next: u64 },

    #[error("empty grid")]
    EmptyGrid,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("requested precision {requested:e} is below the reachable floor for {what}")]
    PrecisionUnreachable { what: &'static str, requested: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
