//! Exact adjacency dimension of small graphs.
//!
//! The crate provides a compact bit-row [`Graph`], exact solvers for adjacency
//! and metric dimension with certified bases, generators for the extremal graph
//! families, a census of all small graphs, and an exhaustive checker for the
//! known characterizations of adjacency dimension.

pub mod census;
pub mod error;
pub mod families;
pub mod graph;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use families::{make_named, FamilySpec};
pub use graph::{graph6_decode, graph6_encode, Graph};
pub use solver::{adjacency_dimension, metric_dimension, DimensionResult, SolveMode};
