//! Exact spectral characterization of small graphs.
//!
//! The crate covers exact integer characteristic polynomials of the
//! adjacency, Laplacian and signless Laplacian matrices, line-graph style
//! transforms, floating-point spectra with error bounds, combinatorial
//! invariants, and an exhaustive census of graphs up to isomorphism that
//! decides whether a graph is determined by its spectrum.

pub mod census;
pub mod error;
pub mod exact;
pub mod graph;
pub mod reproduce;
pub mod spectra;
pub mod structure;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{Family, Graph, MultiGraph};
