//! Star edge-colorings of Halin graphs, squares of paths and cycles, and
//! generalized Petersen graphs `P(3n, n)`.
//!
//! The crate builds the graph families, colors them constructively,
//! verifies star colorings with concrete witnesses, and computes exact star
//! chromatic indices of small graphs by backtracking.

pub mod colorers;
pub mod dot;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod io;
pub mod suite;
pub mod verify;

pub use error::{Error, FailedColoring, Result};
pub use dot::export_dot;
pub use exact::{ExactOptions, ExactResult};
pub use graph::{EdgeColoring, Graph, HalinGraph};
pub use io::{Family, GraphFile, HalinParts};
pub use suite::{run_suite, BenchEntry, Report, Status};
pub use verify::{StarViolation, ViolationKind};
