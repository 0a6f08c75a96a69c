use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotInGraph(Vertex, Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex sequence is not a path")]
    NotAPath,
    #[error("quotient graph is not a cactus")]
    QuotientNotCactus,
    #[error("premise violated: {0}")]
    PremiseViolated(&'static str),
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("no connected core exists")]
    NoCore,
    #[error("universal set construction failed for n={n}, k={k}")]
    BudgetExceeded { n: usize, k: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
