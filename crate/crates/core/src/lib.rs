//! Vanishing quantum minors of Cauchon diagrams.
//!
//! For an `m x n` Cauchon diagram this crate builds the weighted Cauchon
//! graph, computes its path matrix over the quantum torus (both by summing
//! path weights and by the restoration recursion), takes quantum
//! determinants of its square submatrices, and decides which quantum minors
//! vanish. A minor vanishes exactly when the graph has no vertex-disjoint
//! path system joining its rows to its columns; that graph-side test is a
//! unit-capacity max-flow and is kept independent of the algebra so the two
//! can be checked against each other.
//!
//! Module map:
//! - [`qtorus`]: exact arithmetic with q-commuting Laurent monomials.
//! - [`diagram`]: Cauchon diagrams (validation, text format, enumeration).
//! - [`cgraph`]: the Cauchon graph, its edge weights and directed paths.
//! - [`pathmatrix`]: path matrix by enumeration and by restoration.
//! - [`minors`]: quantum determinants, disjoint path systems, generators.

pub mod cgraph;
pub mod diagram;
pub mod minors;
pub mod parallel;
pub mod pathmatrix;
pub mod qtorus;

pub use cgraph::{CauchonGraph, DirectedPath, Vertex};
pub use diagram::CauchonDiagram;
pub use minors::{MinorIndex, PathSystem};
pub use parallel::Exec;
pub use pathmatrix::BMatrix;
pub use qtorus::{Element, GenIndex, Monomial, QLaurent};

/// A configured enumeration limit was exceeded.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("more than {cap} {what}; raise the cap to continue")]
pub struct CapExceeded {
    pub what: &'static str,
    pub cap: usize,
}
