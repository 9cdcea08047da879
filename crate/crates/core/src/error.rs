use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: expected exactly two tokens, found {found:?}")]
    MalformedLine { line: usize, found: String },

    #[error("line {line}: self-loop on vertex {label:?}")]
    SelfLoop { line: usize, label: String },

    #[error("vertex {0} is out of range")]
    UnknownVertex(Vertex),

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    #[error("source and target are the same vertex")]
    SameTerminals,

    #[error("vertex {0} was removed")]
    VertexRemoved(Vertex),

    #[error("vertex set contains a terminal")]
    TerminalInSet,

    #[error("vertex {0} is not a neighbour of the source")]
    NotANeighbor(Vertex),

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(Vertex, Vertex),

    #[error("vertex {0} is not an endpoint of the contracted edge")]
    NotAnEndpoint(Vertex),

    #[error("terminals are adjacent; no separator exists")]
    TerminalsAdjacent,

    #[error("source side is adjacent to the sink; no separator exists")]
    SourceSinkAdjacent,

    #[error("terminals are already separated")]
    AlreadySeparated,

    #[error("vertex set does not separate the terminals")]
    NotASeparator,

    #[error("vertex set is not a minimal separator")]
    NotMinimal,

    #[error("path is not a simple s,t-path")]
    NotAPath,

    #[error("path has a chord between positions {0} and {1}")]
    NotChordless(usize, usize),

    #[error("vertex {0} is not an inner vertex of the path")]
    VertexNotOnPath(Vertex),

    #[error("graph has {n} vertices, oracle limit is {max}")]
    TooLarge { n: usize, max: usize },

    #[error("size bound must be at least 1")]
    InvalidBound,

    #[error("unknown enumeration strategy {0:?}")]
    UnknownStrategy(String),
}
