#![forbid(unsafe_code)]

//! Exact integer-lattice algorithms: Hermite normal form bases, integer spans
//! of point sets, dual lattices, and coset enumeration.
//!
//! Everything in this crate is computed with arbitrary-size integers and
//! rationals; there is no floating point anywhere. Lattices are kept in a
//! canonical Hermite normal form so that two lattices are equal exactly when
//! their basis matrices are equal.

mod dual;
mod lattice;
mod point_set;
pub mod vecmat;

pub use dual::DualLattice;
pub use lattice::{hnf, integer_span, IntegerLattice};
pub use point_set::IntPointSet;

pub use rug::{Integer, Rational};

/// Errors for lattice operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    /// A dual-lattice operation was requested on a lattice of rank < dim.
    #[error("lattice has rank {rank} < ambient dimension {dim}")]
    RankDeficient { rank: usize, dim: usize },
    /// A vector or point had the wrong number of coordinates.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}
