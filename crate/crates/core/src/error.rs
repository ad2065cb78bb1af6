use thiserror::Error;

/// Everything that can go wrong while building or analysing a multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has no edges")]
    NoEdges,
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),
    #[error("matrix is not square ({rows} rows, row {row} has {cols} columns)")]
    NonSquare {
        rows: usize,
        row: usize,
        cols: usize,
    },
    #[error("graph is not strongly connected: no directed path from `{from}` to `{to}`")]
    NotStronglyConnected { from: String, to: String },
    #[error("vector has {found} entries but the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry {index} of the multiplier vector is not strictly positive")]
    NonPositiveEntry { index: usize },
    #[error("vector is not in the kernel of the Laplacian")]
    NotPeriodVector,
    #[error("graph is not Eulerian (in-degree differs from out-degree at `{0}`)")]
    NotEulerian(String),
    #[error("search space of {size} exceeds the cap of {cap}")]
    SearchSpaceTooLarge { size: String, cap: u64 },
    #[error("no repeated rotor state within {cap} steps")]
    CapExceeded { cap: u64 },
    #[error("invalid rotor state: {0}")]
    InvalidRotorState(String),
    #[error("value {0} is too large to materialise")]
    TooLarge(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
