use thiserror::Error;

/// Errors raised by the library.
///
/// `Domain` covers inputs outside an operation's contract (negative labels,
/// non-coprime parameters, vanishing intertwiner denominators). `Internal`
/// is an assertion failure inside an exact computation and always indicates
/// a bug.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(format!($($arg)*)) };
}

macro_rules! internal {
    ($($arg:tt)*) => { $crate::error::Error::Internal(format!($($arg)*)) };
}

pub(crate) use domain;
pub(crate) use internal;
