//! Quantum minors of the path matrix and the matching graph-side test.
//!
//! A quantum minor `det_q M[I,J]` vanishes exactly when the Cauchon graph
//! has no vertex-disjoint system of paths joining the rows `I` to the
//! columns `J`. [`qdet`] computes the algebraic side, [`disjoint_system_exists`]
//! the graph side (as a unit-capacity max-flow), and [`cross_validate`]
//! checks them against each other for every minor of a diagram.

mod flow;
mod ideal;
mod index;
mod qdet;
mod systems;

use thiserror::Error;

pub use flow::{disjoint_system_exists, disjoint_system_witness, max_disjoint_paths};
pub use ideal::{
    cross_validate, cross_validate_with, generators, generators_with, lgv_check, lgv_check_with,
    lgv_sides, CrossReport, LgvSides, SizeTally, Violation,
};
pub use index::{all_minor_indices, MinorIndex};
pub use qdet::{inversions, qdet};
pub use systems::{
    enumerate_disjoint_systems, for_each_disjoint_system, for_each_path_system, PathSystem,
};

use crate::CapExceeded;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinorError {
    #[error("row and column index lists differ in length ({rows} vs {cols})")]
    SizeMismatch { rows: usize, cols: usize },
    #[error("index list {0:?} is not strictly increasing and 1-based")]
    BadIndexList(Vec<usize>),
    #[error("minor {index} does not fit a {m}x{n} matrix")]
    ShapeMismatch {
        index: MinorIndex,
        m: usize,
        n: usize,
    },
    #[error(transparent)]
    Cap(#[from] CapExceeded),
}
