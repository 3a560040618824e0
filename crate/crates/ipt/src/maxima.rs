//! Absolute maxima of `|σ_S|` via the dual of the integer span, and the
//! spanning test for integer polytopes.

use lattice_core::{integer_span, DualLattice, IntPointSet, IntegerLattice};
use polytope_geom::RationalPolytope;
use rug::Rational;

use crate::IptError;

/// The lattice data answering where `|σ_S|` attains `|S|`: the integer span
/// `L_S`, its dual `L_S*`, and the `det L_S` inequivalent maximum locations
/// in `[0, 1)^d`.
#[derive(Debug, Clone)]
pub struct MaximaAnalysis {
    pub lattice: IntegerLattice,
    pub dual: DualLattice,
    pub reps: Vec<Vec<Rational>>,
}

/// Requires the integer span of `S` to have full rank; `|σ_S(ξ)| = |S|`
/// exactly on the dual lattice, and `reps` lists the classes mod `Z^d`.
pub fn maxima_analysis(s: &IntPointSet) -> Result<MaximaAnalysis, IptError> {
    let lattice = integer_span(s);
    if !lattice.is_full_rank() {
        return Err(IptError::RankDeficient {
            rank: lattice.rank(),
            dim: lattice.dim(),
        });
    }
    let dual = lattice.dual_basis().expect("full rank");
    let reps = lattice.dual_coset_reps().expect("full rank");
    Ok(MaximaAnalysis { lattice, dual, reps })
}

/// Whether the lattice points of `P` integrally span all of `Z^d`.
pub fn is_spanning(p: &RationalPolytope) -> bool {
    let points = p.lattice_points();
    if points.is_empty() {
        return false;
    }
    integer_span(&points).is_standard()
}
