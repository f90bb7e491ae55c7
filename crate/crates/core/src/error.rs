use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{what} index {index} out of range (allowed 1..={max})")]
    IndexRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("generator {gen} is not allowed in theory {theory}")]
    Theory { gen: String, theory: String },

    #[error("type error: {0}")]
    Type(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("size limit exceeded: {0}")]
    Limit(String),

    #[error("frieze error: {0}")]
    Frieze(String),

    #[error("equation holds in J_omega; no collapse")]
    NoCollapse,

    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
