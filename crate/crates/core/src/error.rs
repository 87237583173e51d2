use thiserror::Error;

/// Failures shared by every engine in the crate.
///
/// Guard violations are distinct from bad input so that callers (the CLI in
/// particular) can map them to different exit statuses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid EFL configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size guard exceeded for {what}: {actual} > {limit}")]
    SizeGuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("memory guard exceeded: {live} live terms > {limit}")]
    MemoryGuardExceeded { limit: usize, live: usize },
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::SizeGuardExceeded { .. } | Error::MemoryGuardExceeded { .. }
        )
    }

    pub(crate) fn guard(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::SizeGuardExceeded {
            what,
            limit,
            actual,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
