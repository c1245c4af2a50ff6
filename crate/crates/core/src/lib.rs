//! Power domination, domination and zero forcing on small graphs, and the
//! token addition/removal and token jumping reconfiguration graphs of their
//! solution sets.
//!
//! Base graphs have at most 64 vertices so that a vertex set is one `u64`.
//! Reconfiguration graphs are unbounded and live behind [`sparse::Adjacency`].

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod graph;
pub mod iso;
pub mod properties;
pub mod recon;
pub mod set;
pub mod sparse;

pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph};
pub use properties::{PropertyKind, SetFamily};
pub use recon::{ReconGraph, ReconLimits, ReconModel, TarBound};
pub use set::VertexSet;
pub use sparse::{Adjacency, SparseGraph};
