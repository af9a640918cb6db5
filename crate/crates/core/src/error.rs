use thiserror::Error;

use crate::halfdiag::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("invalid sequence index {0}")]
    InvalidIndex(i64),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("invalid half diagram: {0}")]
    InvalidHalfDiagram(Violation),
    #[error("half diagrams cannot be joined: {0}")]
    IncompatibleHalves(String),
    #[error("diagram sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("diagram is not a member of the cell basis: {0}")]
    BasisMismatch(String),
    #[error("method {method} is not available for {what}")]
    MethodUnsupported { method: String, what: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArguments(msg.into())
}
