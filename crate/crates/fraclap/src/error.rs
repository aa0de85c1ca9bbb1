//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally invalid parameter set (e.g. a pole of a Gamma factor).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A series failed to reach the requested tolerance.
    #[error("series did not converge: {0}")]
    Convergence(String),

    /// Adaptive quadrature stopped above its error target. The achieved
    /// estimate and its error bound are reported.
    #[error("quadrature did not converge: estimate {estimate:e}, error bound {bound:e}")]
    Quadrature { estimate: f64, bound: f64 },

    /// Inconsistent run configuration (tail mode, truncation radii, windows).
    #[error("configuration error: {0}")]
    Config(String),

    /// Heat-kernel truncation too small for the requested time.
    #[error("truncation too small: {0}")]
    Truncation(String),

    /// A study whose data admits no slope fit (e.g. identically zero errors).
    #[error("degenerate study: {0}")]
    Degenerate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
