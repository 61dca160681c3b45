//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated (non-finite value, bad size, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Tensor/matrix shapes do not line up. The message carries both shapes.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// The rotation angle is within tolerance of pi, where the logarithm map is
    /// not uniquely defined. Callers must split the window instead of silently
    /// picking a branch.
    #[error("rotation angle {angle} rad is within {tol} of pi; logarithm branch undefined")]
    NearBranchCut { angle: f64, tol: f64 },

    /// A matrix factorization (Cholesky/LDL) failed, typically because the
    /// input is not positive definite.
    #[error("decomposition failure: {0}")]
    DecompositionFailure(String),

    /// A covariance is numerically singular for the requested operation.
    #[error("ill-conditioned matrix: condition estimate {cond:.3e} exceeds {limit:.1e}")]
    IllConditioned { cond: f64, limit: f64 },

    /// Malformed input file content.
    #[error("parse error at {path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    /// Structurally valid input that violates a data invariant
    /// (e.g. non-monotone timestamps).
    #[error("validation error: {0}")]
    Validation(String),

    /// Two trajectories could not be associated by timestamp.
    #[error("alignment error: {0}")]
    Alignment(String),

    /// Not enough samples for the requested statistic.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// An API contract was violated (e.g. backward on a non-scalar).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Training or evaluation hit a numerical failure (divergence, NaN loss).
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code category used by the command-line tools:
    /// 2 for data/validation problems, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NearBranchCut { .. }
            | Error::DecompositionFailure(_)
            | Error::IllConditioned { .. }
            | Error::NumericalFailure(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
