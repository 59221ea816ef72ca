//! Certified solutions to the triangle packing/covering problem on sparse
//! graphs.
//!
//! A solution is a set of edge-disjoint triangles `T` together with an edge
//! set `Y` whose deletion leaves the graph triangle-free, with `|Y| <= 2|T|`.
//! For graphs of maximum average degree below 7 such a pair always exists and
//! [`engine::solve`] builds it by repeatedly removing a *reducible* vertex or
//! edge set, each step carrying a certificate that [`certificates`] checks
//! independently.

pub mod certificates;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod par;
pub mod scan;
pub mod sparsity;
pub mod wke;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Triangle};
