use thiserror::Error;

use crate::rootsys::RootVec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: {constraint}")]
    InvalidRank {
        family: String,
        rank: usize,
        constraint: &'static str,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} is not a root")]
    NotARoot(RootVec),

    #[error("zero vector is not allowed here")]
    ZeroVector,

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("{0} lies outside the closed Weyl chamber")]
    OutsideChamber(RootVec),

    #[error("normal direction {xi} is not orthogonal to {h}")]
    NotNormal { xi: RootVec, h: RootVec },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("unknown symmetric pair `{0}`")]
    UnknownPair(String),

    #[error("parameter error for `{pair}`: {message}")]
    Params { pair: String, message: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed value `{input}`: {message}")]
    Malformed { input: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn malformed(input: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Malformed {
            input: input.into(),
            message: message.into(),
        }
    }

    pub(crate) fn invariant(message: impl Into<String>) -> Self {
        Error::InvariantViolation(message.into())
    }
}
