use thiserror::Error;

/// Errors raised by the numerical and exact routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid order n = {n} for c = {c}: need n > 0, and n > c when c >= 0")]
    InvalidOrder { c: f64, n: f64 },

    #[error("n / (-c) = {ratio} is not a positive integer (c = {c}, n = {n})")]
    NonIntegerL { c: f64, n: f64, ratio: f64 },

    #[error("x = {x} lies outside the admissible interval [{lo}, {hi}]")]
    DomainError { x: f64, lo: f64, hi: f64 },

    #[error("truncation needs more than {max_terms} terms (certified tail bound reached: {achieved_bound:e})")]
    CapExceeded { max_terms: usize, achieved_bound: f64 },

    #[error("unsupported parameters: {0}")]
    UnsupportedParams(String),

    #[error("x = {x} is a singular point of the equation")]
    SingularPoint { x: f64 },

    #[error("size {n} exceeds the configured cap {cap}")]
    SizeExceeded { n: usize, cap: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexError { index: usize, max: usize },

    #[error("linear system is inconsistent: {0}")]
    InconsistentSystem(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
