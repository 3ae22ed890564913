//! Mutual-visibility colorings of graphs: validation, exact search, glued
//! binary and t-ary trees, and the NAE-3SAT reduction for 2 colors.

pub mod error;
pub mod gluedtrees;
pub mod graph;
pub mod reduction;
pub mod solver;
pub mod visibility;

pub use error::{Error, Result};
pub use graph::io::{parse_graph, write_graph};
pub use graph::{DistanceOracle, Graph, UNREACHABLE};
pub use visibility::io::{parse_coloring, write_coloring, LoadedColoring};
pub use visibility::{
    is_gp_set, is_mv_set, validate_gp_coloring, validate_mv_coloring, Coloring, ReportMode, ValidationReport, Violation,
};
