//! Pairwise signature separation over a corpus of point sets.

use lattice_core::IntPointSet;
use rug::Float;

use crate::prec::{PrecComplex, MIN_PREC};
use crate::sigma::signature;

/// Result of a pairwise signature scan: the smallest gap and the first pair
/// attaining it (in `(i, j)` lexicographic order, so ties are deterministic).
#[derive(Debug, Clone)]
pub struct CollisionScan {
    pub min_gap: Float,
    pub pair: (usize, usize),
    pub signatures: Vec<PrecComplex>,
}

/// Computes all pairwise signature distances. Returns `None` when the corpus
/// has fewer than two sets.
pub fn collision_scan(corpus: &[IntPointSet], prec: u32) -> Option<CollisionScan> {
    assert!(prec >= MIN_PREC);
    if corpus.len() < 2 {
        return None;
    }
    let signatures: Vec<PrecComplex> = corpus.iter().map(|s| signature(s, prec)).collect();
    let mut min_gap: Option<Float> = None;
    let mut pair = (0, 0);
    for i in 0..signatures.len() {
        for j in i + 1..signatures.len() {
            let gap = signatures[i].dist(&signatures[j]);
            if min_gap.as_ref().is_none_or(|m| gap < *m) {
                min_gap = Some(gap);
                pair = (i, j);
            }
        }
    }
    Some(CollisionScan {
        min_gap: min_gap.expect("at least one pair"),
        pair,
        signatures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::grid_subsets;

    #[test]
    fn duplicate_sets_give_zero_gap() {
        let a = IntPointSet::from_i64s(2, &[&[0, 0], &[1, 1]]);
        let b = IntPointSet::from_i64s(2, &[&[0, 1]]);
        let scan = collision_scan(&[a.clone(), b, a], 128).unwrap();
        assert!(scan.min_gap.is_zero());
        assert_eq!(scan.pair, (0, 2));
    }

    #[test]
    fn tiny_corpus_is_rejected() {
        let a = IntPointSet::from_i64s(1, &[&[0]]);
        assert!(collision_scan(&[a], 128).is_none());
    }

    #[test]
    fn unit_square_subsets_separate() {
        let corpus = grid_subsets(&[1, 1]);
        assert_eq!(corpus.len(), 16);
        let scan = collision_scan(&corpus, 256).unwrap();
        assert!(scan.min_gap > 0);
    }
}
