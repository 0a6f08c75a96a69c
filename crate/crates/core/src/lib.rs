//! Exact solver for contracting a connected graph into a cactus using at most
//! `k` edge contractions.

pub mod cli;
pub mod coloring;
pub mod core_extract;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod solver;
pub mod universal;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex, VertexSet};
pub use solver::{solve, ContractionSolution, Mode, SolverConfig};
