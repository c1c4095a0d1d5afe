//! Combinatorial realizations of the level-1 highest weight crystals of the
//! quantum affine algebra of type C₂⁽¹⁾.
//!
//! The crate provides:
//!
//! - [`cartan`]: exact integer arithmetic for the affine Cartan datum
//!   (simple roots, coroots, fundamental weights, the null root, pairings
//!   and levels);
//! - [`crystal`]: the abstract crystal contract and the tensor product rule;
//! - [`bcrystal`]: the five-element perfect crystal of level 1 with a
//!   perfectness validator;
//! - [`path`]: the path realization — eventually-periodic sequences over the
//!   perfect crystal with signature-rule operators;
//! - [`wall`]: the Young-wall realization — colored block stacks with the
//!   same operators, plus the reading map between the two;
//! - [`graph`]: breadth-first crystal graph generation, axiom checking,
//!   rooted isomorphism testing, weight multiplicities, and JSON/DOT export.
//!
//! All values are immutable and all operations are pure functions on exact
//! integers, so everything is freely shareable across threads.

pub mod bcrystal;
pub mod cartan;
pub mod crystal;
pub mod graph;
pub mod path;
pub mod signature;
pub mod wall;

pub use cartan::{idx, AffineWeight, CartanMatrix, Coroot, Index};
pub use crystal::{CrystalModel, TensorModel};
pub use graph::{build_graph, check_axioms, check_root_isomorphism, weight_multiplicities};

/// Errors surfaced by graph generation and literal parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Graph generation hit the configured node cap.
    #[error("graph generation exceeded the node cap of {cap}")]
    Capacity { cap: usize },

    /// A literal failed to parse; `position` is the byte offset of the
    /// first offending token.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A column index beyond the stored columns of a wall.
    #[error("column index {index} out of range for a wall with {columns} stored columns")]
    ColumnIndex { index: usize, columns: usize },
}
