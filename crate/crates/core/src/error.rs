use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("size guard exceeded: {what} needs {needed}, bound is {bound}")]
    Guard { what: String, needed: String, bound: u64 },

    #[error("{context}: {report}")]
    Invalid { context: String, report: Report },

    #[error("incoherent pre-extension: no common f/g value at ({x}, {y}) for the {which} constraint")]
    Incoherent { x: usize, y: usize, which: &'static str },

    #[error("value {value} at {tuple:?} of {function} lies outside the bicenter")]
    OutsideBicenter { function: &'static str, tuple: Vec<usize>, value: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub fn invalid(context: impl Into<String>, report: Report) -> Self {
        Error::Invalid { context: context.into(), report }
    }
}
