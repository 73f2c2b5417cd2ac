//! Error types shared across the crate.

use thiserror::Error;

/// Errors reported by evaluation and verification routines.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    /// The message names the violated bound.
    #[error("domain error: {0}")]
    Domain(String),

    /// The argument is within `tol` of a pole of the function.
    #[error("{function}: argument {x} is within {tol:e} of the pole at {pole}")]
    Pole {
        function: &'static str,
        x: f64,
        pole: f64,
        tol: f64,
    },

    /// The result exceeds the finite f64 range. `signed_infinity` carries the
    /// sign the true value diverges to.
    #[error("{function}: result overflows f64 range (diverges to {signed_infinity})")]
    Overflow {
        function: &'static str,
        signed_infinity: f64,
    },

    /// The quadrature did not reach the requested tolerance within the
    /// allowed refinement levels.
    #[error(
        "quadrature did not converge: error estimate {error_estimate:e} after {levels} levels"
    )]
    QuadratureNotConverged { error_estimate: f64, levels: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
