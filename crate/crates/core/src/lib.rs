//! Exact solvers for Pt-free graphs built on induced-path buckets.
//!
//! The engine enumerates all induced paths of the active subgraph, groups
//! them into endpoint buckets, and branches on a vertex whose closed
//! neighborhood hits many paths in many buckets. On top of that kernel sit
//! three exact solvers:
//!
//! - maximum weight independent set ([`mwis::find_mis`]),
//! - list 3-coloring with min-cost and independent odd cycle transversal
//!   variants ([`coloring`]),
//! - maximum weight induced matching via the squared line graph
//!   ([`matching`]).
//!
//! Every solver ships with an independent brute-force oracle for
//! differential testing, and [`generate`] produces seeded Pt-free corpora.

pub mod bitset;
pub mod coloring;
pub mod decompose;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod mwis;
pub mod paths;
pub mod report;
mod util;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{closed_neighborhood, components, Graph, WeightMap};
pub use io::{parse_graph, parse_instance, write_graph, Instance};
pub use paths::{
    enumerate_colored_paths, enumerate_induced_paths, is_pt_free, pt_free_certificate,
    ColoredPathIndex, InducedPath, ListAssignment, PathIndex,
};
