use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("value does not fit in a finite f64")]
    FloatOverflow,

    #[error("result would contain a pi^2 term, which leaves the a + b*pi field")]
    PiSquared,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-integrable exponent combination: {0}")]
    NonIntegrable(String),

    #[error("exact inner products require a non-negative integer gamma; got {0} (use the quadrature path)")]
    NonIntegerGamma(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn index(msg: impl Into<String>) -> Self {
        Error::IndexOutOfRange(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
