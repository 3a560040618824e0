//! Dual lattices and coset enumeration for full-rank integer lattices.

use std::collections::BTreeSet;

use rug::{Integer, Rational};

use crate::lattice::IntegerLattice;
use crate::vecmat;
use crate::LatticeError;

/// The dual `L* = { ξ : ⟨n, ξ⟩ ∈ Z for all n ∈ L }` of a full-rank integer
/// lattice, generated by the rows of a rational basis matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualLattice {
    dim: usize,
    basis: Vec<Vec<Rational>>,
    denominator: Integer,
}

impl DualLattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Rows generate the dual lattice; the matrix is the inverse transpose of
    /// the primal Hermite basis, so `basis · primalᵀ = I` exactly.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Least common denominator of the basis entries.
    pub fn denominator(&self) -> &Integer {
        &self.denominator
    }

    /// Exact membership: `ξ ∈ L*` iff `B ξ` is integral for the primal basis
    /// `B`.
    pub fn contains(&self, xi: &[Rational], primal: &IntegerLattice) -> bool {
        xi.len() == self.dim
            && primal
                .basis()
                .iter()
                .all(|row| *vecmat::dot_int_rat(row, xi).denom() == 1)
    }
}

impl IntegerLattice {
    /// Dual-lattice basis (inverse transpose of the Hermite basis).
    pub fn dual_basis(&self) -> Result<DualLattice, LatticeError> {
        if !self.is_full_rank() || self.dim() == 0 {
            return Err(LatticeError::RankDeficient {
                rank: self.rank(),
                dim: self.dim(),
            });
        }
        let rows: Vec<Vec<Rational>> = self.basis().iter().map(|r| vecmat::int_to_rat(r)).collect();
        let inv = vecmat::inverse(&rows).expect("full-rank basis is invertible");
        let basis = vecmat::transpose(&inv);
        let mut denominator = Integer::from(1);
        for row in &basis {
            for x in row {
                denominator.lcm_mut(x.denom());
            }
        }
        Ok(DualLattice {
            dim: self.dim(),
            basis,
            denominator,
        })
    }

    /// The `det L` distinct representatives of `L*/Z^d`, reduced into
    /// `[0, 1)^d` and sorted (so the zero vector comes first).
    ///
    /// Representatives are enumerated by closing the dual basis rows under
    /// addition mod `Z^d`; the group has order exactly `det L`, so no Smith
    /// form is needed.
    pub fn dual_coset_reps(&self) -> Result<Vec<Vec<Rational>>, LatticeError> {
        let dual = self.dual_basis()?;
        let index = self.index().expect("full rank").clone();

        let reduce = |v: &[Rational]| -> Vec<Rational> { v.iter().map(vecmat::fract).collect() };
        let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
        seen.insert(vec![Rational::new(); self.dim()]);
        let mut frontier: Vec<Vec<Rational>> = seen.iter().cloned().collect();
        while let Some(rep) = frontier.pop() {
            for gen in dual.basis() {
                let next: Vec<Rational> = rep
                    .iter()
                    .zip(gen)
                    .map(|(a, b)| Rational::from(a + b))
                    .collect();
                let next = reduce(&next);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        debug_assert_eq!(Integer::from(seen.len() as u64), index);
        Ok(seen.into_iter().collect())
    }
}
