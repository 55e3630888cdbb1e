use thiserror::Error;

/// Errors raised by the solvers and model constructors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed input: empty or ragged matrices, non-finite numbers, shape mismatches.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A model parameter violates one of its defining inequalities.
    #[error("constraint violated: {0}")]
    Constraint(String),
    /// An iterative method failed to converge or bracket a root.
    #[error("no convergence: {reason}")]
    NoConvergence {
        reason: String,
        /// `(lambda, g(lambda))` pairs evaluated while bracketing, if any.
        probes: Vec<(f64, f64)>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
