use thiserror::Error;

use crate::partition::SetPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is outside the supported range 1..={max}", max = crate::graph::MAX_VERTICES)]
    VertexOutOfRange(usize),

    #[error("vertex {0} is not in the vertex set")]
    UnknownVertex(usize),

    #[error("loop at vertex {0}: simple graphs have no loops")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("graph is disconnected: components {components}")]
    Disconnected { components: SetPartition },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {0} is the root and has no parent")]
    IsRoot(usize),

    #[error("tree is not increasing")]
    NotIncreasing,

    #[error("tree is not G-connected: J({0}) misses the graph")]
    NotGConnected(usize),

    #[error("vertex sets differ")]
    VertexSetMismatch,

    #[error("set partitions have different ground sets")]
    GroundMismatch,

    #[error("invalid rooted tree: {0}")]
    InvalidTree(String),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("edge {0}-{1} already belongs to the tree")]
    EdgeInTree(usize, usize),

    #[error("first graph is not a subgraph of the second")]
    NotSubgraph,

    #[error("graph is not a spanning tree")]
    NotATree,

    #[error("{what} of size {size} exceeds the configured bound {max}")]
    TooLarge {
        what: &'static str,
        size: usize,
        max: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
