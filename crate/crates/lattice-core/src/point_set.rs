//! Finite sets of integer points with a canonical ordering.

use rug::Integer;
use serde::de::Error as _;
use serde::ser::{Error as _, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::LatticeError;

/// A finite, deduplicated, lexicographically ordered set of integer points in
/// a fixed ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPointSet {
    dim: usize,
    points: Vec<Vec<Integer>>,
}

impl IntPointSet {
    pub fn new(
        dim: usize,
        points: impl IntoIterator<Item = Vec<Integer>>,
    ) -> Result<Self, LatticeError> {
        let mut pts: Vec<Vec<Integer>> = Vec::new();
        for p in points {
            if p.len() != dim {
                return Err(LatticeError::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            pts.push(p);
        }
        pts.sort();
        pts.dedup();
        Ok(Self { dim, points: pts })
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            points: Vec::new(),
        }
    }

    /// Test fixture helper; panics on inconsistent dimensions.
    pub fn from_i64s(dim: usize, pts: &[&[i64]]) -> Self {
        Self::new(
            dim,
            pts.iter()
                .map(|p| p.iter().map(|&x| Integer::from(x)).collect()),
        )
        .expect("consistent dimensions")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Integer>] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vec<Integer>> {
        self.points.iter()
    }

    pub fn contains(&self, p: &[Integer]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }

    /// The reflected set `-S`.
    pub fn negated(&self) -> Self {
        let pts = self
            .points
            .iter()
            .map(|p| p.iter().map(|x| Integer::from(-x)).collect::<Vec<_>>());
        Self::new(self.dim, pts).expect("same dimension")
    }

    /// Exact central-symmetry oracle: `S == -S` as sets.
    pub fn is_centrally_symmetric(&self) -> bool {
        *self == self.negated()
    }

    /// Image under an integer matrix (rows of `m` are the matrix rows), i.e.
    /// each point `p` maps to `m · p`.
    pub fn transform(&self, m: &[Vec<Integer>]) -> Result<Self, LatticeError> {
        let out_dim = m.len();
        let mut pts = Vec::with_capacity(self.points.len());
        for p in &self.points {
            if self.dim != 0 && m[0].len() != self.dim {
                return Err(LatticeError::DimensionMismatch {
                    expected: self.dim,
                    got: m[0].len(),
                });
            }
            pts.push(m.iter().map(|row| crate::vecmat::dot_int(row, p)).collect());
        }
        Self::new(out_dim, pts)
    }

    /// Translate every point by `t`.
    pub fn translated(&self, t: &[Integer]) -> Result<Self, LatticeError> {
        if t.len() != self.dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dim,
                got: t.len(),
            });
        }
        let pts = self
            .points
            .iter()
            .map(|p| p.iter().zip(t).map(|(x, y)| Integer::from(x + y)).collect());
        Self::new(self.dim, pts)
    }
}

impl<'a> IntoIterator for &'a IntPointSet {
    type Item = &'a Vec<Integer>;
    type IntoIter = std::slice::Iter<'a, Vec<Integer>>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

// Wire format: {"points": [[int, ...], ...]}. Dimension is inferred on read;
// an empty list reads back as dimension 0.
impl Serialize for IntPointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Points<'a>(&'a [Vec<Integer>]);
        impl Serialize for Points<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for p in self.0 {
                    let row: Result<Vec<i128>, _> = p
                        .iter()
                        .map(|x| {
                            x.to_i128()
                                .ok_or_else(|| S::Error::custom("coordinate exceeds i128"))
                        })
                        .collect();
                    seq.serialize_element(&row?)?;
                }
                seq.end()
            }
        }
        let mut s = serializer.serialize_struct("IntPointSet", 1)?;
        s.serialize_field("points", &Points(&self.points))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for IntPointSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            points: Vec<Vec<i128>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let dim = raw.points.first().map_or(0, Vec::len);
        let pts = raw
            .points
            .into_iter()
            .map(|p| p.into_iter().map(Integer::from).collect());
        IntPointSet::new(dim, pts).map_err(D::Error::custom)
    }
}
