use thiserror::Error;

use crate::laurent::LaurentPoly;

/// Errors raised by the computations in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on the inputs was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An exact division left a nonzero remainder. This always indicates a
    /// misapplied identity, so the remainder is kept for inspection.
    #[error("inexact division: ({dividend}) / ({divisor}) leaves remainder {remainder}")]
    InexactDivision {
        dividend: LaurentPoly,
        divisor: LaurentPoly,
        remainder: LaurentPoly,
    },

    /// Two computations that must agree produced different polynomials.
    #[error("identity violated: {identity}: {left} != {right}")]
    IdentityViolation {
        identity: String,
        left: LaurentPoly,
        right: LaurentPoly,
    },

    /// A postcondition failed in a way that is not a polynomial mismatch.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// True for errors caused by bad inputs rather than broken invariants.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::InvalidArgument(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
