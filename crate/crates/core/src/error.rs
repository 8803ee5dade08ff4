//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the numeric layers.
#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// An argument left the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A weight or class parameter violates its construction constraints.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Malformed textual configuration.
    #[error("parse error: {0}")]
    Parse(String),

    /// Adaptive quadrature exhausted its budget before meeting the tolerance.
    /// Carries the best estimate together with the achieved error bound.
    #[error("quadrature did not converge: estimate {estimate:.6e}, error bound {error_bound:.6e}, requested {requested:.6e}")]
    Quadrature {
        estimate: f64,
        error_bound: f64,
        requested: f64,
    },

    /// A series truncation could not certify the requested tolerance.
    #[error("series truncation failed after {terms} terms: remainder bound {bound:.6e} > tol {tol:.6e}")]
    Truncation { terms: usize, bound: f64, tol: f64 },

    /// A certified bracket is wider than the contract allows.
    #[error("precision error: bracket half-width {bracket:.6e} exceeds {limit:.6e} relative to value {value:.6e}")]
    Precision { bracket: f64, value: f64, limit: f64 },

    /// Operation not available for this weight kind.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
