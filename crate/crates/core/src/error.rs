use thiserror::Error;

/// Errors raised by the evaluators, quadrature rules and report drivers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma pole at {0}")]
    Pole(f64),
    #[error("gamma overflow at {0}")]
    Overflow(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series did not converge within {terms} terms")]
    NoConvergence { terms: usize },
    #[error("non-finite integrand value at {0}")]
    NonFinite(String),
    #[error("integral diverges: {0}")]
    Divergent(String),
    #[error("series truncated at {terms} terms with tail estimate {tail:e}")]
    Truncation { terms: usize, tail: f64 },
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
