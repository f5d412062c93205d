//! Error type shared across the library.

use crate::poly::Polynomial;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A computation hit its configured budget. `partial` holds the state
    /// reached so far (e.g. an unreduced intermediate basis) so callers can
    /// inspect or report it; it is never presented as an answer.
    #[error("resource limit exceeded: {what}")]
    ResourceLimit { what: String, partial: Vec<Polynomial> },

    #[error("parse error: {0}")]
    Parse(String),

    /// Diagonal entries of `r` are not pairwise distinct.
    #[error("point is not in the rss locus: diagonal entries {0} and {1} coincide")]
    NotRss(usize, usize),

    #[error("sampling failed after {attempts} attempts: {reason}")]
    Sampling { attempts: usize, reason: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Exit code contract: 2 invalid input, 3 resource limit, 4 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Parse(_) | Error::NotRss(_, _) => 2,
            Error::ResourceLimit { .. } | Error::Sampling { .. } => 3,
            Error::Internal(_) => 4,
        }
    }
}
