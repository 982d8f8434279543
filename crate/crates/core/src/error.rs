use std::io;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} lies outside the universe 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("universe mismatch: expected {expected} vertices, found {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("protocol violation: {0}")]
    ProtocolViolation(String),

    /// The teacher refused to answer a query; the payload is the wire reason.
    #[error("query rejected: {0}")]
    QueryRejected(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("no consistent hypothesis: {0}")]
    Inconsistent(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("round limit of {0} exceeded")]
    RoundLimit(usize),

    #[error("usage: {0}")]
    Usage(String),

    #[error("network error: {0}")]
    Network(#[from] io::Error),
}

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ProtocolViolation(_) | Error::QueryRejected(_) => 2,
            Error::Capacity(_) | Error::RoundLimit(_) => 3,
            Error::Usage(_) | Error::Parse { .. } => 4,
            Error::Network(_) => 5,
            _ => 1,
        }
    }
}
