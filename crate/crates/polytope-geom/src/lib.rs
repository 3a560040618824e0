#![forbid(unsafe_code)]

//! Exact rational polytopes at desk scale: convex hulls with facet
//! enumeration, lattice point listing, dilation, vertex tangent cones, and
//! simplicial triangulation of cones and polytopes.
//!
//! Hulls are computed by brute force over vertex subsets with exact rational
//! arithmetic, which is the right trade-off up to the supported ambient
//! dimension of 4. Polytopes are closed: boundary lattice points count.

mod cones;
mod hull;
mod polytope;

pub use cones::{
    triangulate_cone, triangulate_polytope, vertex_tangent_cone, ConePosition, SimplicialCone,
};
pub use hull::convex_hull;
pub use polytope::{polytope_equal, Facet, RationalPolytope};

pub use rug::{Integer, Rational};

/// Maximum supported ambient dimension for hulls and triangulations.
pub const MAX_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("input point list is empty")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient dimension {dim} exceeds the supported maximum {MAX_DIM}")]
    DimensionTooLarge { dim: usize },
    #[error("polytope has affine dimension {affine_dim} < ambient dimension {dim}")]
    NotFullDimensional { affine_dim: usize, dim: usize },
    #[error("rays do not generate a pointed cone")]
    NotPointed,
    #[error("the given point is not a vertex of the polytope")]
    NotAVertex,
}
