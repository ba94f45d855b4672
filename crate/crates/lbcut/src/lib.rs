//! Exact solver for length-bounded cuts and multi-cuts.
//!
//! Remove the fewest edges so that prescribed vertex pairs end up far apart.
//! The solver runs a table dynamic program over a nice tree decomposition,
//! so instances whose graphs have small tree-width are exactly solvable even
//! when brute force over edge subsets is hopeless. The crate also ships the
//! independent brute-force reference used for cross-checking, and generators
//! for structured hard instances built from chained two-level gadgets.

pub mod decomp;
pub mod dp;
pub mod error;
pub mod graph;
pub mod hardgen;
pub mod instance;
pub mod lenvec;
pub mod nice;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{Distance, Edge, Graph, VertexId};
pub use instance::CutInstance;
