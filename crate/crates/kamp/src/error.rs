//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("quadrature did not converge within budget (estimate {estimate:e}, residual {residual:e})")]
    Quadrature { estimate: f64, residual: f64 },

    #[error("no admissible root: {0}")]
    NoRoot(String),

    #[error("target {target} unattainable; attainable range is [{lo}, {hi}]")]
    UnattainableTarget { target: f64, lo: f64, hi: f64 },

    #[error("boundary case: {0}")]
    Boundary(String),

    #[error("iteration budget exceeded: {0}")]
    IterationBudget(String),

    #[error("small-lambda limit did not converge for delta'={delta_prime} (relative change {rel_change:e})")]
    LimitNotConverged { delta_prime: f64, rel_change: f64 },
}

impl Error {
    /// Whether the error is a usage/validation problem rather than a
    /// numerical failure. The CLI maps validation errors to exit code 1
    /// and numerical failures to exit code 2.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_) | Error::Parse { .. } | Error::Io(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
