#![forbid(unsafe_code)]

//! Integer point transforms of finite integer point sets: arbitrary-precision
//! evaluation, the one-point algebraic signature, absolute-maxima analysis
//! through dual lattices, central-symmetry testing, lattice-relative
//! transforms, and pairwise signature scans over corpora.

pub mod corpus;
mod maxima;
pub mod prec;
mod scan;
mod sigma;
mod symmetry;
mod xi;

pub use maxima::{is_spanning, maxima_analysis, MaximaAnalysis};
pub use prec::{
    float_of_rational, guarded, pi, tolerance, two_pi, unit_phase_rational, unit_phase_real,
    PrecComplex, GUARD_BITS, MIN_PREC,
};
pub use scan::{collision_scan, CollisionScan};
pub use sigma::{is_absolute_max, sigma_eval, sigma_relative, signature};
pub use symmetry::{central_symmetry_report, central_symmetry_test, SymmetryReport};
pub use xi::{first_primes, xi_star, Scalar, SignaturePoint, Xi};

pub use rug::{Float, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IptError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("integer span has rank {rank} < ambient dimension {dim}")]
    RankDeficient { rank: usize, dim: usize },
    #[error("matrix is singular over the rationals")]
    SingularMatrix,
    #[error(transparent)]
    Geometry(#[from] polytope_geom::GeomError),
}

impl From<lattice_core::LatticeError> for IptError {
    fn from(e: lattice_core::LatticeError) -> Self {
        match e {
            lattice_core::LatticeError::RankDeficient { rank, dim } => {
                IptError::RankDeficient { rank, dim }
            }
            lattice_core::LatticeError::DimensionMismatch { expected, got } => {
                IptError::DimensionMismatch { expected, got }
            }
        }
    }
}
