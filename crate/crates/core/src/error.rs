use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violated an operation's precondition (length mismatch,
    /// point outside the box, wrong parent count, ...).
    InvalidArgument(String),
    /// The index pool is too small for the requested selection method.
    InfeasibleSelection {
        method: &'static str,
        pool: usize,
        needed: usize,
    },
    /// The problem key or objective count is not part of the suite.
    Unsupported(String),
    /// Engine configuration rejected before any evaluation.
    Config(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::InfeasibleSelection {
                method,
                pool,
                needed,
            } => write!(
                f,
                "{method} selection needs {needed} admissible indices but the pool has {pool}"
            ),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::Error::InvalidArgument(alloc::format!($($arg)*))
    };
}
pub(crate) use invalid;
