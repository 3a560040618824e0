//! Exact convex hulls by brute-force facet enumeration.
//!
//! The hull is computed inside the affine hull of the input: points are
//! mapped to exact coordinates with respect to an echelon basis of the affine
//! hull, facet hyperplanes are enumerated over point subsets there, and the
//! supporting inequalities are lifted back to ambient coordinates. This keeps
//! one code path for full- and lower-dimensional polytopes.

use std::collections::BTreeSet;

use lattice_core::vecmat;
use rug::{Integer, Rational};

use crate::polytope::{Facet, RationalPolytope};
use crate::{GeomError, MAX_DIM};

/// Minimal vertex set and complete facet list of `conv(points)`.
pub fn convex_hull(points: &[Vec<Rational>]) -> Result<RationalPolytope, GeomError> {
    if points.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    let dim = points[0].len();
    if dim > MAX_DIM {
        return Err(GeomError::DimensionTooLarge { dim });
    }
    for p in points {
        if p.len() != dim {
            return Err(GeomError::DimensionMismatch {
                expected: dim,
                got: p.len(),
            });
        }
    }
    let mut pts: Vec<Vec<Rational>> = points.to_vec();
    pts.sort();
    pts.dedup();

    let base = pts[0].clone();
    let dirs = affine_basis(&pts, &base);
    let m = dirs.len();

    // affine-hull equations: primitive integer vectors orthogonal to all dirs
    let hull_equations: Vec<(Vec<Integer>, Rational)> = if m == dim {
        Vec::new()
    } else {
        vecmat::nullspace(&dirs, dim)
            .into_iter()
            .map(|e| {
                let n = vecmat::primitive_direction(&e);
                let b = vecmat::dot_int_rat(&n, &base);
                (n, b)
            })
            .collect()
    };

    if m == 0 {
        return Ok(RationalPolytope::from_parts(
            dim,
            0,
            vec![base],
            Vec::new(),
            hull_equations,
        ));
    }

    // coordinates of each point inside the affine hull
    let coords: Vec<Vec<Rational>> = pts
        .iter()
        .map(|p| affine_coords(&dirs, &base, p))
        .collect();

    let local_facets = enumerate_facets(&coords, m);

    // vertices: points whose active facet normals span the hull
    let mut vertices = Vec::new();
    for (p, c) in pts.iter().zip(&coords) {
        let active: Vec<Vec<Rational>> = local_facets
            .iter()
            .filter(|(n, b)| vecmat::dot_int_rat(n, c) == *b)
            .map(|(n, _)| vecmat::int_to_rat(n))
            .collect();
        if vecmat::rank(&active) == m {
            vertices.push(p.clone());
        }
    }

    // lift facets to ambient coordinates
    let gram: Vec<Vec<Rational>> = dirs
        .iter()
        .map(|u| dirs.iter().map(|w| vecmat::dot_rat(u, w)).collect())
        .collect();
    let gram_inv = vecmat::inverse(&gram).expect("Gram matrix of independent rows");
    let facets = local_facets
        .into_iter()
        .map(|(n, b)| {
            let n_rat = vecmat::int_to_rat(&n);
            let y = vecmat::mat_vec(&gram_inv, &n_rat);
            // ambient normal = Σ y_i · dirs_i
            let mut ambient = vec![Rational::new(); dim];
            for (yi, u) in y.iter().zip(&dirs) {
                for (a, x) in ambient.iter_mut().zip(u) {
                    *a += Rational::from(yi * x);
                }
            }
            let offset_raw = vecmat::dot_rat(&ambient, &base) + b;
            primitive_facet(&ambient, &offset_raw)
        })
        .collect();

    Ok(RationalPolytope::from_parts(
        dim,
        m,
        vertices,
        facets,
        hull_equations,
    ))
}

/// Echelon basis of the affine hull directions `p - base`.
fn affine_basis(pts: &[Vec<Rational>], base: &[Rational]) -> Vec<Vec<Rational>> {
    let mut diffs: Vec<Vec<Rational>> = pts
        .iter()
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(x, b)| Rational::from(x - b))
                .collect()
        })
        .collect();
    let rank = vecmat::row_reduce(&mut diffs);
    diffs.truncate(rank);
    diffs
}

/// Coordinates of `p` with respect to `base` and the reduced echelon basis:
/// read off the pivot columns, then verify exactly.
fn affine_coords(dirs: &[Vec<Rational>], base: &[Rational], p: &[Rational]) -> Vec<Rational> {
    let dim = base.len();
    let diff: Vec<Rational> = p
        .iter()
        .zip(base)
        .map(|(x, b)| Rational::from(x - b))
        .collect();
    let mut c = Vec::with_capacity(dirs.len());
    for u in dirs {
        let pivot = (0..dim).find(|&j| u[j] != 0).expect("nonzero basis row");
        c.push(Rational::from(&diff[pivot] / &u[pivot]));
    }
    debug_assert!({
        let mut recon = vec![Rational::new(); dim];
        for (ci, u) in c.iter().zip(dirs) {
            for (r, x) in recon.iter_mut().zip(u) {
                *r += Rational::from(ci * x);
            }
        }
        recon == diff
    });
    c
}

/// All supporting hyperplanes of a full-dimensional point configuration in
/// dimension `m`, as `(primitive integer normal, offset)` with all points on
/// the `≤` side.
fn enumerate_facets(coords: &[Vec<Rational>], m: usize) -> Vec<(Vec<Integer>, Rational)> {
    let mut found: BTreeSet<(Vec<Integer>, Rational)> = BTreeSet::new();
    let n = coords.len();
    let mut subset: Vec<usize> = (0..m).collect();
    loop {
        if let Some(normal) = hyperplane_normal(coords, &subset, m) {
            let offset = vecmat::dot_rat(&normal, &coords[subset[0]]);
            let mut any_below = false;
            let mut any_above = false;
            for c in coords {
                match vecmat::dot_rat(&normal, c).cmp(&offset) {
                    std::cmp::Ordering::Less => any_below = true,
                    std::cmp::Ordering::Greater => any_above = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
            if !any_above {
                found.insert(primitive_pair(&normal, &offset));
            }
            if !any_below {
                let neg: Vec<Rational> = normal.iter().map(|x| -x.clone()).collect();
                let noff = -offset;
                found.insert(primitive_pair(&neg, &noff));
            }
        }
        // next m-subset of 0..n in lexicographic order
        let mut i = m;
        loop {
            if i == 0 {
                return found.into_iter().collect();
            }
            i -= 1;
            if subset[i] != i + n - m {
                subset[i] += 1;
                for j in i + 1..m {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Normal of the unique hyperplane through the subset, if it is affinely
/// independent enough to determine one.
fn hyperplane_normal(coords: &[Vec<Rational>], subset: &[usize], m: usize) -> Option<Vec<Rational>> {
    let base = &coords[subset[0]];
    let rows: Vec<Vec<Rational>> = subset[1..]
        .iter()
        .map(|&i| {
            coords[i]
                .iter()
                .zip(base)
                .map(|(x, b)| Rational::from(x - b))
                .collect()
        })
        .collect();
    let kernel = vecmat::nullspace(&rows, m);
    (kernel.len() == 1).then(|| kernel.into_iter().next().unwrap())
}

fn primitive_pair(normal: &[Rational], offset: &Rational) -> (Vec<Integer>, Rational) {
    let (n, f) = primitive_scale(normal);
    (n, Rational::from(offset * &f))
}

fn primitive_facet(normal: &[Rational], offset: &Rational) -> Facet {
    let (n, f) = primitive_scale(normal);
    Facet {
        normal: n,
        offset: Rational::from(offset * &f),
    }
}

/// Positive rational factor `f` and primitive integer vector `n = f · v`.
fn primitive_scale(v: &[Rational]) -> (Vec<Integer>, Rational) {
    let mut lcm = Integer::from(1);
    for x in v {
        lcm.lcm_mut(x.denom());
    }
    let ints: Vec<Integer> = v
        .iter()
        .map(|x| Integer::from(x.numer() * &lcm) / x.denom())
        .collect();
    let g = vecmat::content(&ints);
    assert!(g != 0, "cannot primitivize the zero vector");
    let n: Vec<Integer> = ints.into_iter().map(|x| x / &g).collect();
    (n, Rational::from((lcm, g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_pts(data: &[&[i64]]) -> Vec<Vec<Rational>> {
        data.iter()
            .map(|row| row.iter().map(|&x| Rational::from(x)).collect())
            .collect()
    }

    #[test]
    fn origin_inside_segment_is_dropped() {
        let p = convex_hull(&int_pts(&[&[-1, 0], &[1, 0], &[0, 1], &[0, 0]])).unwrap();
        assert_eq!(p.vertices(), &int_pts(&[&[-1, 0], &[0, 1], &[1, 0]])[..]);
        assert_eq!(p.affine_dim(), 2);
    }

    #[test]
    fn unit_triangle_has_three_facets() {
        let p = convex_hull(&int_pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(p.facets().len(), 3);
        // facet normals are primitive with the inequality pointing outward
        for f in p.facets() {
            assert_eq!(vecmat::content(&f.normal), 1);
            for v in p.vertices() {
                assert!(vecmat::dot_int_rat(&f.normal, v) <= f.offset);
            }
        }
    }

    #[test]
    fn single_point_hull() {
        let p = convex_hull(&int_pts(&[&[2, 3]])).unwrap();
        assert_eq!(p.affine_dim(), 0);
        assert_eq!(p.vertices().len(), 1);
        assert!(p.facets().is_empty());
        assert_eq!(p.hull_equations().len(), 2);
    }

    #[test]
    fn rejects_dimension_above_maximum() {
        let p = vec![vec![Rational::new(); 5]];
        assert_eq!(
            convex_hull(&p).unwrap_err(),
            GeomError::DimensionTooLarge { dim: 5 }
        );
    }

    #[test]
    fn rejects_empty_input() {
        assert_eq!(convex_hull(&[]).unwrap_err(), GeomError::EmptyInput);
    }

    #[test]
    fn unit_cube_in_three_dimensions() {
        let mut pts = Vec::new();
        for k in 0..8i64 {
            pts.push(vec![k & 1, (k >> 1) & 1, (k >> 2) & 1]);
        }
        let pts: Vec<Vec<Rational>> = pts
            .iter()
            .map(|p| p.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        let p = convex_hull(&pts).unwrap();
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.facets().len(), 6);
    }

    #[test]
    fn lower_dimensional_triangle_in_space() {
        // triangle in the plane x + y + z = 1
        let p = convex_hull(&int_pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(p.affine_dim(), 2);
        assert_eq!(p.hull_equations().len(), 1);
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(p.lattice_points().len(), 3);
    }
}
