//! The polytope type: exact vertex and facet data, lattice point enumeration,
//! dilation, translation, and equality.

use lattice_core::{vecmat, IntPointSet};
use rug::{Integer, Rational};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A supporting halfspace `⟨normal, x⟩ ≤ offset` with a primitive integer
/// normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<Integer>,
    pub offset: Rational,
}

/// A bounded convex polytope with exact rational vertices.
///
/// Vertices are the extreme points only, kept sorted. Facet inequalities cut
/// the polytope out of its affine hull; for lower-dimensional polytopes the
/// affine hull itself is recorded as a list of equations `⟨normal, x⟩ = b`,
/// so membership is always "all equations hold and all facets hold".
#[derive(Debug, Clone)]
pub struct RationalPolytope {
    dim: usize,
    affine_dim: usize,
    vertices: Vec<Vec<Rational>>,
    facets: Vec<Facet>,
    hull_equations: Vec<(Vec<Integer>, Rational)>,
}

impl RationalPolytope {
    pub(crate) fn from_parts(
        dim: usize,
        affine_dim: usize,
        mut vertices: Vec<Vec<Rational>>,
        mut facets: Vec<Facet>,
        mut hull_equations: Vec<(Vec<Integer>, Rational)>,
    ) -> Self {
        vertices.sort();
        vertices.dedup();
        facets.sort();
        facets.dedup();
        hull_equations.sort();
        hull_equations.dedup();
        Self {
            dim,
            affine_dim,
            vertices,
            facets,
            hull_equations,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    /// Extreme points, lexicographically sorted.
    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Affine-hull equations; empty for full-dimensional polytopes.
    pub fn hull_equations(&self) -> &[(Vec<Integer>, Rational)] {
        &self.hull_equations
    }

    /// Exact membership test (closed polytope).
    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.dim {
            return false;
        }
        self.hull_equations
            .iter()
            .all(|(e, b)| vecmat::dot_int_rat(e, x) == *b)
            && self
                .facets
                .iter()
                .all(|f| vecmat::dot_int_rat(&f.normal, x) <= f.offset)
    }

    /// All integer points of the (closed) polytope, by scanning the integer
    /// bounding box of the vertices with exact membership tests.
    pub fn lattice_points(&self) -> IntPointSet {
        let d = self.dim;
        if self.vertices.is_empty() {
            return IntPointSet::empty(d);
        }
        let mut lo = Vec::with_capacity(d);
        let mut hi = Vec::with_capacity(d);
        for j in 0..d {
            let mut min = self.vertices[0][j].clone();
            let mut max = min.clone();
            for v in &self.vertices[1..] {
                if v[j] < min {
                    min = v[j].clone();
                }
                if v[j] > max {
                    max = v[j].clone();
                }
            }
            lo.push(Integer::from(min.ceil_ref()));
            hi.push(Integer::from(max.floor_ref()));
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return IntPointSet::empty(d);
        }

        let mut out: Vec<Vec<Integer>> = Vec::new();
        let mut cur = lo.clone();
        'scan: loop {
            let as_rat: Vec<Rational> = cur.iter().map(Rational::from).collect();
            if self.contains(&as_rat) {
                out.push(cur.clone());
            }
            // odometer increment
            for j in (0..d).rev() {
                cur[j] += 1;
                if cur[j] <= hi[j] {
                    continue 'scan;
                }
                cur[j] = lo[j].clone();
            }
            break;
        }
        IntPointSet::new(d, out).expect("scan emits fixed dimension")
    }

    /// The dilate `kP` for a positive integer `k`.
    pub fn dilate(&self, k: &Integer) -> Self {
        assert!(*k >= 1, "dilation factor must be a positive integer");
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| Rational::from(x * k)).collect())
            .collect();
        let facets = self
            .facets
            .iter()
            .map(|f| Facet {
                normal: f.normal.clone(),
                offset: Rational::from(&f.offset * k),
            })
            .collect();
        let hull_equations = self
            .hull_equations
            .iter()
            .map(|(e, b)| (e.clone(), Rational::from(b * k)))
            .collect();
        Self::from_parts(self.dim, self.affine_dim, vertices, facets, hull_equations)
    }

    /// The translate `P + t`.
    pub fn translated(&self, t: &[Rational]) -> Self {
        assert_eq!(t.len(), self.dim);
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .zip(t)
                    .map(|(x, s)| Rational::from(x + s))
                    .collect()
            })
            .collect();
        let facets = self
            .facets
            .iter()
            .map(|f| Facet {
                normal: f.normal.clone(),
                offset: f.offset.clone() + vecmat::dot_int_rat(&f.normal, t),
            })
            .collect();
        let hull_equations = self
            .hull_equations
            .iter()
            .map(|(e, b)| (e.clone(), b.clone() + vecmat::dot_int_rat(e, t)))
            .collect();
        Self::from_parts(self.dim, self.affine_dim, vertices, facets, hull_equations)
    }

    /// Whether all vertices have integer coordinates.
    pub fn is_integer_polytope(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|x| *x.denom() == 1))
    }

    /// Least common multiple of all vertex-coordinate denominators.
    pub fn vertex_denominator_lcm(&self) -> Integer {
        let mut l = Integer::from(1);
        for v in &self.vertices {
            for x in v {
                l.lcm_mut(x.denom());
            }
        }
        l
    }
}

/// Exact equality: same ambient dimension and the same vertex set.
pub fn polytope_equal(p: &RationalPolytope, q: &RationalPolytope) -> bool {
    p.dim == q.dim && p.vertices == q.vertices
}

impl PartialEq for RationalPolytope {
    fn eq(&self, other: &Self) -> bool {
        polytope_equal(self, other)
    }
}

impl Eq for RationalPolytope {}

// Wire format: {"vertices": [["p/q", ...], ...]}. Reading rebuilds the hull,
// so non-extreme input points are dropped and the result is canonical.
impl Serialize for RationalPolytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<String>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(Rational::to_string).collect())
            .collect();
        let mut s = serializer.serialize_struct("RationalPolytope", 1)?;
        s.serialize_field("vertices", &rows)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for RationalPolytope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<Vec<String>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut pts = Vec::with_capacity(raw.vertices.len());
        for row in &raw.vertices {
            let mut p = Vec::with_capacity(row.len());
            for s in row {
                let r: Rational = s
                    .trim()
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad rational {s:?}")))?;
                p.push(r);
            }
            pts.push(p);
        }
        crate::hull::convex_hull(&pts).map_err(D::Error::custom)
    }
}
