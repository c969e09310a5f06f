use thiserror::Error;

use crate::label::VertexLabel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex id {id} out of range for a graph with {n} vertices")]
    IdOutOfRange { id: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate label {0} (vertices {1} and {2})")]
    DuplicateLabel(VertexLabel, usize, usize),
    #[error("label list has {got} entries but the graph has {n} vertices")]
    LabelCount { got: usize, n: usize },
    #[error("induced subgraph needs at least one vertex")]
    EmptyVertexSet,
    #[error("label {0} not present in graph")]
    LabelAbsent(VertexLabel),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("cannot parse family spec at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices but the graph has {n}")]
    Partial { got: usize, n: usize },
    #[error("color 0 assigned to vertex {0}; colors start at 1")]
    ZeroColor(usize),
    #[error("input coloring is not a packing coloring ({0} violations)")]
    InvalidInput(usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("invalid pattern parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("brute force is limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("no packing coloring with at most {0} colors")]
    CapTooSmall(u32),
    #[error("color budget must be at least 1")]
    ZeroBudget,
    #[error("search needs {0} distance-limited colors; at most 64 are supported")]
    TooManyColors(u32),
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: malformed JSON: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
