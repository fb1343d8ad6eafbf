use thiserror::Error;

/// Errors raised by the library and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("{0} lies outside [0, 1]")]
    Domain(String),
    #[error("index {index} out of range (must be below {bound})")]
    OutOfRange { index: u64, bound: u64 },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("precision failure: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
