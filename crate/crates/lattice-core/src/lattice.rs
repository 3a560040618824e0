//! Integer lattices in canonical Hermite normal form.

use rug::Integer;

use crate::point_set::IntPointSet;

/// An integer lattice of rank `r ≤ d`, stored as an `r × d` basis matrix in
/// row-style Hermite normal form: echelon zero pattern, positive pivots, and
/// entries above each pivot reduced into `[0, pivot)`. The form is canonical,
/// so two lattices are equal iff their bases are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    dim: usize,
    rank: usize,
    basis: Vec<Vec<Integer>>,
    index: Option<Integer>,
}

/// Hermite normal form of the integer row span of `rows`.
///
/// Zero rows are discarded; an all-zero (or dimension-zero) input yields the
/// rank-0 lattice. Panics if `rows` is empty, since the ambient dimension
/// cannot be inferred.
pub fn hnf(rows: &[Vec<Integer>]) -> IntegerLattice {
    assert!(!rows.is_empty(), "hnf needs at least one row");
    let dim = rows[0].len();
    assert!(
        rows.iter().all(|r| r.len() == dim),
        "hnf rows must share a dimension"
    );

    let mut m: Vec<Vec<Integer>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..dim {
        // gcd elimination below the current pivot row
        loop {
            let piv = (rank..m.len())
                .filter(|&i| m[i][col] != 0)
                .min_by_key(|&i| Integer::from(m[i][col].abs_ref()));
            let Some(piv) = piv else { break };
            m.swap(rank, piv);
            let mut any_left = false;
            for i in rank + 1..m.len() {
                if m[i][col] != 0 {
                    let q = Integer::from(&m[i][col]).div_rem_floor(m[rank][col].clone()).0;
                    for j in col..dim {
                        let t = Integer::from(&m[rank][j] * &q);
                        m[i][j] -= t;
                    }
                    any_left |= m[i][col] != 0;
                }
            }
            if !any_left {
                break;
            }
        }
        if m.get(rank).is_some_and(|r| r[col] != 0) {
            if m[rank][col] < 0 {
                for x in m[rank].iter_mut() {
                    *x = Integer::from(-&*x);
                }
            }
            // reduce entries above the pivot into [0, pivot)
            let pivot_row = m[rank].clone();
            for i in 0..rank {
                if m[i][col] != 0 {
                    let q = Integer::from(&m[i][col]).div_rem_floor(pivot_row[col].clone()).0;
                    if q != 0 {
                        for j in col..dim {
                            let t = Integer::from(&pivot_row[j] * &q);
                            m[i][j] -= t;
                        }
                    }
                }
            }
            rank += 1;
        }
    }
    m.truncate(rank);

    let index = (rank == dim && dim > 0).then(|| {
        let mut det = Integer::from(1);
        for (i, row) in m.iter().enumerate() {
            let p = (0..dim).find(|&j| row[j] != 0).expect("pivot");
            debug_assert!(i == 0 || p > 0);
            det *= &row[p];
        }
        det
    });

    IntegerLattice {
        dim,
        rank,
        basis: m,
        index,
    }
}

/// The lattice generated by the integer span of the points themselves (not of
/// their differences). An empty set yields the rank-0 lattice.
pub fn integer_span(points: &IntPointSet) -> IntegerLattice {
    if points.is_empty() {
        return IntegerLattice {
            dim: points.dim(),
            rank: 0,
            basis: Vec::new(),
            index: None,
        };
    }
    hnf(points.points())
}

impl IntegerLattice {
    /// The standard lattice `Z^d`.
    pub fn standard(dim: usize) -> Self {
        let basis: Vec<Vec<Integer>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| Integer::from(u32::from(i == j)))
                    .collect()
            })
            .collect();
        Self {
            dim,
            rank: dim,
            basis,
            index: Some(Integer::from(1)),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank == self.dim
    }

    /// Basis rows in Hermite normal form.
    pub fn basis(&self) -> &[Vec<Integer>] {
        &self.basis
    }

    /// `|det|` of the basis when the lattice has full rank.
    pub fn index(&self) -> Option<&Integer> {
        self.index.as_ref()
    }

    /// Whether this is exactly `Z^d`.
    pub fn is_standard(&self) -> bool {
        self.is_full_rank() && self.index == Some(Integer::from(1))
    }

    /// Exact membership test by back-substitution on the echelon basis.
    pub fn contains(&self, v: &[Integer]) -> bool {
        if v.len() != self.dim {
            return false;
        }
        let mut rem: Vec<Integer> = v.to_vec();
        for row in &self.basis {
            let p = (0..self.dim).find(|&j| row[j] != 0).expect("pivot");
            if rem[p] == 0 {
                continue;
            }
            let (q, r) = Integer::from(&rem[p]).div_rem_floor(row[p].clone());
            if r != 0 {
                return false;
            }
            for j in p..self.dim {
                let t = Integer::from(&row[j] * &q);
                rem[j] -= t;
            }
        }
        rem.iter().all(|x| *x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(data: &[&[i64]]) -> Vec<Vec<Integer>> {
        data.iter()
            .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
            .collect()
    }

    #[test]
    fn zero_rows_are_discarded() {
        let l = hnf(&rows(&[&[0, 0], &[0, 3]]));
        assert_eq!(l.rank(), 1);
        assert_eq!(l.basis(), &rows(&[&[0, 3]])[..]);
        assert!(l.index().is_none());
    }

    #[test]
    fn all_zero_input_has_rank_zero() {
        let l = hnf(&rows(&[&[0, 0, 0]]));
        assert_eq!(l.rank(), 0);
        assert!(l.basis().is_empty());
    }

    #[test]
    fn negative_entries_normalize() {
        let l = hnf(&rows(&[&[-2, 0], &[0, -3]]));
        assert_eq!(l.basis(), &rows(&[&[2, 0], &[0, 3]])[..]);
        assert_eq!(l.index(), Some(&Integer::from(6)));
    }

    #[test]
    fn above_pivot_entries_are_reduced() {
        // span of {(1,5),(0,3)}: the HNF must reduce 5 into [0,3)
        let l = hnf(&rows(&[&[1, 5], &[0, 3]]));
        assert_eq!(l.basis(), &rows(&[&[1, 2], &[0, 3]])[..]);
    }

    #[test]
    fn zero_vector_is_always_contained() {
        let l = hnf(&rows(&[&[2, 1], &[0, 7]]));
        assert!(l.contains(&[Integer::new(), Integer::new()]));
    }

    #[test]
    fn wrong_dimension_is_not_contained() {
        let l = IntegerLattice::standard(2);
        assert!(!l.contains(&[Integer::from(1)]));
    }
}
