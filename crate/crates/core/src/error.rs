use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gauge mismatch: {0}")]
    GaugeMismatch(String),
    #[error("not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("genericity violation: {0}")]
    GenericityViolation(String),
    #[error("degenerate leading coefficient: {0}")]
    DegenerateLeading(String),
    #[error("denominator escaped: {0}")]
    DenominatorEscape(String),
    #[error("nonzero remainder: {0}")]
    NonzeroRemainder(String),
    #[error("safe window exhausted: {0}")]
    SafeWindowExhausted(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
