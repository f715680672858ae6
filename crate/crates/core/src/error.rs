use std::path::PathBuf;

use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),

    #[error("edge ({0}, {1}) is already present")]
    DuplicateEdge(VertexId, VertexId),

    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(VertexId, VertexId),

    /// New vertices must extend the id range contiguously.
    #[error("vertex {id} is out of range for a graph with {n} vertices")]
    VertexOutOfRange { id: VertexId, n: usize },

    #[error("malformed input at line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("timestamp at line {line} is smaller than the previous one")]
    DecreasingTimestamp { line: usize },

    #[error("only {available} of the {requested} requested non-bridge edges could be removed")]
    InsufficientNonBridgeEdges { requested: usize, available: usize },

    #[error("event {index}: {source}")]
    Event {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Stream(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn malformed(line: usize, reason: impl Into<String>) -> Self {
        Error::MalformedLine {
            line,
            reason: reason.into(),
        }
    }
}
