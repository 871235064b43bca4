//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

use crate::poly::BiPoly;

/// Errors produced by the arithmetic kernel and the moduli-space operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero polynomial or zero denominator.
    DivisionByZero,
    /// Exact polynomial division failed; carries the nonzero remainder at
    /// the point where no further polynomial quotient step was possible.
    NotDivisible { remainder: BiPoly },
    /// An index argument is outside its admissible range.
    InvalidRange { reason: String },
    /// A documented precondition of the operation does not hold.
    PreconditionViolation { reason: String },
    /// The requested case is not covered by any implemented result.
    OutOfScope { reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotDivisible { remainder } => write!(
                f,
                "not exactly divisible; nonzero remainder with {} term(s)",
                remainder.term_count()
            ),
            Error::InvalidRange { reason } => write!(f, "invalid range: {reason}"),
            Error::PreconditionViolation { reason } => {
                write!(f, "precondition violated: {reason}")
            }
            Error::OutOfScope { reason } => write!(f, "out of scope: {reason}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn precondition(reason: impl Into<String>) -> Self {
        Error::PreconditionViolation {
            reason: reason.into(),
        }
    }

    pub(crate) fn out_of_scope(reason: impl Into<String>) -> Self {
        Error::OutOfScope {
            reason: reason.into(),
        }
    }
}
