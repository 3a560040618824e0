//! Integer point transform evaluation and the one-point algebraic signature.

use lattice_core::{vecmat, IntPointSet};
use polytope_geom::{convex_hull, RationalPolytope};
use rug::{Integer, Rational};

use crate::prec::{guarded, tolerance, PrecComplex, MIN_PREC};
use crate::xi::{xi_star, Xi};
use crate::IptError;

/// `σ_S(ξ) = Σ_{n ∈ S} e^(2πi ⟨n, ξ⟩)`, summed in canonical point order.
pub fn sigma_eval(s: &IntPointSet, xi: &Xi, prec: u32) -> Result<PrecComplex, IptError> {
    assert!(prec >= MIN_PREC);
    if !s.is_empty() && xi.dim() != s.dim() {
        return Err(IptError::DimensionMismatch {
            expected: s.dim(),
            got: xi.dim(),
        });
    }
    let wp = guarded(prec);
    let mut acc = PrecComplex::zero(wp);
    for n in s {
        acc = acc.add(&xi.phase(n, wp));
    }
    Ok(acc.rounded(prec))
}

/// The one-point signature `σ_S(ξ*)` at the algebraic evaluation point.
pub fn signature(s: &IntPointSet, prec: u32) -> PrecComplex {
    assert!(prec >= MIN_PREC);
    if s.is_empty() {
        return PrecComplex::zero(prec);
    }
    if s.dim() == 0 {
        // the only point is the empty tuple, with phase 1
        return PrecComplex::one(prec);
    }
    let xi = xi_star(s.dim(), prec).to_xi();
    sigma_eval(s, &xi, prec).expect("dimensions match by construction")
}

/// Whether `|σ_S(ξ)|` attains the absolute maximum `|S|`, within
/// `2^(-prec/2)`.
pub fn is_absolute_max(s: &IntPointSet, xi: &Xi, prec: u32) -> Result<bool, IptError> {
    let value = sigma_eval(s, xi, prec)?;
    let diff = (value.abs() - rug::Float::with_val(prec, s.len() as u64)).abs();
    Ok(diff < tolerance(prec))
}

/// Transform of `P` relative to the full-rank lattice `M(Z^d)`: sums
/// `e^(2πi ⟨n, ξ⟩)` over `n ∈ M(Z^d) ∩ P`, computed by enumerating
/// `k ∈ M⁻¹(P) ∩ Z^d` and evaluating at `Mᵀ ξ`.
pub fn sigma_relative(
    p: &RationalPolytope,
    m: &[Vec<Integer>],
    xi: &Xi,
    prec: u32,
) -> Result<PrecComplex, IptError> {
    let d = p.dim();
    if m.len() != d || m.iter().any(|row| row.len() != d) {
        return Err(IptError::DimensionMismatch {
            expected: d,
            got: m.len(),
        });
    }
    if xi.dim() != d {
        return Err(IptError::DimensionMismatch {
            expected: d,
            got: xi.dim(),
        });
    }
    let rows: Vec<Vec<Rational>> = m.iter().map(|r| vecmat::int_to_rat(r)).collect();
    let inv = vecmat::inverse(&rows).ok_or(IptError::SingularMatrix)?;
    let preimage_vertices: Vec<Vec<Rational>> = p
        .vertices()
        .iter()
        .map(|v| vecmat::mat_vec(&inv, v))
        .collect();
    let preimage = convex_hull(&preimage_vertices)?;
    let points = preimage.lattice_points();
    sigma_eval(&points, &xi.transform_transpose(m), prec)
}
