use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("capacity error: {what} has size {size}, limit is {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid Hoffman graph: {0}")]
    Validity(String),

    #[error("invalid Hoffman sum: {0}")]
    SumValidity(String),

    #[error("construction check `{check}` failed: {detail}")]
    Construction { check: String, detail: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// The search stopped at its node budget; `checkpoint` is a JSON
    /// checkpoint document that resumes it.
    #[error("node budget of {budget} exhausted after {expanded} expansions")]
    Budget {
        budget: usize,
        expanded: usize,
        checkpoint: String,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn construction(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Construction {
            check: check.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
