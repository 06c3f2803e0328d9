use thiserror::Error;

/// Errors raised by graph construction, the invariant engines and the harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input. `offset` is a byte offset for graph6 input
    /// and a 1-based line number for edge lists.
    #[error("parse error at {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// An operation was called outside its domain (disconnected graph,
    /// empty vertex set, generator parameter too small, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The graph is larger than the representation supports.
    #[error("unsupported size: {0}")]
    Unsupported(String),

    /// An exact search or DP would exceed its configured cap.
    #[error("{what} cap exceeded: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
