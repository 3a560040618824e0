//! Vertex tangent cones and simplicial triangulation.

use std::collections::BTreeMap;

use lattice_core::vecmat;
use rug::{Integer, Rational};

use crate::hull::convex_hull;
use crate::polytope::RationalPolytope;
use crate::{GeomError, MAX_DIM};

/// A simplicial cone `apex + cone(generators)` with linearly independent
/// primitive integer generators and the absolute determinant of the generator
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplicialCone {
    apex: Vec<Rational>,
    generators: Vec<Vec<Integer>>,
    det: Integer,
}

/// Position of a direction relative to a cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConePosition {
    Outside,
    Boundary,
    Interior,
}

impl SimplicialCone {
    pub fn apex(&self) -> &[Rational] {
        &self.apex
    }

    pub fn generators(&self) -> &[Vec<Integer>] {
        &self.generators
    }

    pub fn det(&self) -> &Integer {
        &self.det
    }

    pub fn with_apex(mut self, apex: Vec<Rational>) -> Self {
        assert_eq!(apex.len(), self.apex.len());
        self.apex = apex;
        self
    }

    /// Where the direction `dir` (from the apex) sits relative to the cone,
    /// decided by exact barycentric coordinates.
    pub fn position_of(&self, dir: &[Rational]) -> ConePosition {
        let cols: Vec<Vec<Rational>> = self
            .generators
            .iter()
            .map(|g| vecmat::int_to_rat(g))
            .collect();
        let a = vecmat::transpose(&cols);
        match vecmat::solve(&a, dir) {
            None => ConePosition::Outside,
            Some(lambda) => {
                if lambda.iter().any(|l| *l < 0) {
                    ConePosition::Outside
                } else if lambda.iter().any(|l| *l == 0) {
                    ConePosition::Boundary
                } else {
                    ConePosition::Interior
                }
            }
        }
    }
}

/// Primitive integer directions of the edges of `P` incident to the vertex
/// `v`; these generate the tangent cone of `P` at `v`, translated to the
/// origin.
///
/// A candidate vertex `w` spans an edge with `v` exactly when the facets
/// active at both have normals of rank `affine_dim - 1`.
pub fn vertex_tangent_cone(
    p: &RationalPolytope,
    v: &[Rational],
) -> Result<Vec<Vec<Integer>>, GeomError> {
    if !p.is_full_dimensional() {
        return Err(GeomError::NotFullDimensional {
            affine_dim: p.affine_dim(),
            dim: p.dim(),
        });
    }
    if !p.vertices().iter().any(|u| u.as_slice() == v) {
        return Err(GeomError::NotAVertex);
    }
    let d = p.dim();
    let active_at = |x: &[Rational]| -> Vec<usize> {
        p.facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| vecmat::dot_int_rat(&f.normal, x) == f.offset)
            .map(|(i, _)| i)
            .collect()
    };
    let at_v = active_at(v);
    let mut rays = Vec::new();
    for w in p.vertices() {
        if w.as_slice() == v {
            continue;
        }
        let at_w = active_at(w);
        let common: Vec<Vec<Rational>> = at_v
            .iter()
            .filter(|i| at_w.contains(i))
            .map(|&i| vecmat::int_to_rat(&p.facets()[i].normal))
            .collect();
        if vecmat::rank(&common) == d - 1 {
            let dir: Vec<Rational> = w.iter().zip(v).map(|(a, b)| Rational::from(a - b)).collect();
            rays.push(vecmat::primitive_direction(&dir));
        }
    }
    rays.sort();
    rays.dedup();
    Ok(rays)
}

/// Triangulates the pointed full-dimensional cone generated by `rays` into
/// simplicial cones with generators drawn from the input rays.
///
/// The cone is cut with a transversal hyperplane strictly positive on every
/// ray, the scaled ray points are hulled, that cross-section is fan
/// triangulated from its lexicographically smallest vertex, and each
/// cross-section simplex is lifted back to a cone.
pub fn triangulate_cone(rays: &[Vec<Integer>]) -> Result<Vec<SimplicialCone>, GeomError> {
    if rays.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    let d = rays[0].len();
    if d > MAX_DIM {
        return Err(GeomError::DimensionTooLarge { dim: d });
    }
    let mut prim: Vec<Vec<Integer>> = Vec::new();
    for r in rays {
        if r.len() != d {
            return Err(GeomError::DimensionMismatch {
                expected: d,
                got: r.len(),
            });
        }
        if r.iter().all(|x| *x == 0) {
            return Err(GeomError::NotPointed);
        }
        prim.push(vecmat::primitive_direction(&vecmat::int_to_rat(r)));
    }
    prim.sort();
    prim.dedup();

    // hull of {0} ∪ rays: pointedness is "0 is a vertex", and the facets
    // through 0 hand us an exact transversal direction
    let zero = vec![Rational::new(); d];
    let mut hull_pts: Vec<Vec<Rational>> = prim.iter().map(|r| vecmat::int_to_rat(r)).collect();
    hull_pts.push(zero.clone());
    let hull0 = convex_hull(&hull_pts).expect("dimension already checked");
    if hull0.affine_dim() < d {
        return Err(GeomError::NotFullDimensional {
            affine_dim: hull0.affine_dim(),
            dim: d,
        });
    }
    if !hull0.vertices().iter().any(|u| *u == zero) {
        return Err(GeomError::NotPointed);
    }

    let mut transversal = vec![Integer::new(); d];
    for f in hull0.facets() {
        if f.offset == 0 {
            for (t, x) in transversal.iter_mut().zip(&f.normal) {
                *t -= x;
            }
        }
    }

    // scale each ray onto the hyperplane ⟨transversal, x⟩ = 1
    let mut point_to_ray: BTreeMap<Vec<Rational>, usize> = BTreeMap::new();
    let mut section_pts: Vec<Vec<Rational>> = Vec::new();
    for (i, r) in prim.iter().enumerate() {
        let s = vecmat::dot_int(&transversal, r);
        assert!(s > 0, "transversal must be positive on a pointed cone's rays");
        let p: Vec<Rational> = r.iter().map(|x| Rational::from((x.clone(), s.clone()))).collect();
        point_to_ray.insert(p.clone(), i);
        section_pts.push(p);
    }
    let section = convex_hull(&section_pts).expect("dimension already checked");
    debug_assert_eq!(section.affine_dim(), d - 1);

    let mut cones: Vec<SimplicialCone> = triangulate_polytope(&section)
        .into_iter()
        .map(|simplex| {
            let mut generators: Vec<Vec<Integer>> = simplex
                .iter()
                .map(|p| prim[point_to_ray[p]].clone())
                .collect();
            generators.sort();
            let det = vecmat::det_int(&generators).abs();
            debug_assert!(det >= 1);
            SimplicialCone {
                apex: zero.clone(),
                generators,
                det,
            }
        })
        .collect();
    cones.sort();
    Ok(cones)
}

/// Fan triangulation of a polytope into simplices (each a list of
/// `affine_dim + 1` vertices): recursively fans from the lexicographically
/// smallest vertex over the facets that miss it.
pub fn triangulate_polytope(p: &RationalPolytope) -> Vec<Vec<Vec<Rational>>> {
    let verts = p.vertices();
    let m = p.affine_dim();
    if verts.len() == m + 1 {
        return vec![verts.to_vec()];
    }
    let apex = &verts[0];
    let mut pieces = Vec::new();
    for f in p.facets() {
        if vecmat::dot_int_rat(&f.normal, apex) == f.offset {
            continue;
        }
        let fverts: Vec<Vec<Rational>> = verts
            .iter()
            .filter(|v| vecmat::dot_int_rat(&f.normal, v) == f.offset)
            .cloned()
            .collect();
        let facet_poly = convex_hull(&fverts).expect("facet vertices are valid");
        for mut s in triangulate_polytope(&facet_poly) {
            s.push(apex.clone());
            pieces.push(s);
        }
    }
    pieces
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_pts(data: &[&[i64]]) -> Vec<Vec<Rational>> {
        data.iter()
            .map(|row| row.iter().map(|&x| Rational::from(x)).collect())
            .collect()
    }

    fn int_rows(data: &[&[i64]]) -> Vec<Vec<Integer>> {
        data.iter()
            .map(|row| row.iter().map(|&x| Integer::from(x)).collect())
            .collect()
    }

    #[test]
    fn square_corner_cone() {
        let p = convex_hull(&int_pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let rays = vertex_tangent_cone(&p, &int_pts(&[&[0, 0]])[0]).unwrap();
        assert_eq!(rays, int_rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn interval_endpoint_cone() {
        let p = convex_hull(&int_pts(&[&[0], &[1]])).unwrap();
        let rays = vertex_tangent_cone(&p, &int_pts(&[&[1]])[0]).unwrap();
        assert_eq!(rays, int_rows(&[&[-1]]));
    }

    #[test]
    fn reeve_apex_cone() {
        let p = convex_hull(&int_pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]])).unwrap();
        let rays = vertex_tangent_cone(&p, &int_pts(&[&[1, 1, 2]])[0]).unwrap();
        assert_eq!(rays, int_rows(&[&[-1, -1, -2], &[-1, 0, -2], &[0, -1, -2]]));
    }

    #[test]
    fn non_vertex_is_rejected() {
        let p = convex_hull(&int_pts(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap();
        let err = vertex_tangent_cone(&p, &int_pts(&[&[1, 0]])[0]).unwrap_err();
        assert_eq!(err, GeomError::NotAVertex);
    }

    #[test]
    fn flat_polytope_cone_is_rejected() {
        let p = convex_hull(&int_pts(&[&[0, 0], &[1, 0]])).unwrap();
        let err = vertex_tangent_cone(&p, &int_pts(&[&[0, 0]])[0]).unwrap_err();
        assert!(matches!(err, GeomError::NotFullDimensional { .. }));
    }

    #[test]
    fn simplicial_input_is_returned_unchanged() {
        let cones = triangulate_cone(&int_rows(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(cones.len(), 1);
        assert_eq!(cones[0].det(), &Integer::from(1));
        assert_eq!(cones[0].generators(), &int_rows(&[&[0, 1], &[1, 0]])[..]);
    }

    #[test]
    fn square_cone_splits_into_two_with_det_sum_four() {
        let rays = int_rows(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]]);
        let cones = triangulate_cone(&rays).unwrap();
        assert_eq!(cones.len(), 2);
        let sum: Integer = cones.iter().map(|c| c.det().clone()).sum();
        assert_eq!(sum, 4);
        for c in &cones {
            assert_eq!(c.det(), &Integer::from(2));
        }
    }

    #[test]
    fn line_through_origin_is_not_pointed() {
        let err = triangulate_cone(&int_rows(&[&[1, 0], &[-1, 0], &[0, 1]])).unwrap_err();
        assert_eq!(err, GeomError::NotPointed);
    }

    #[test]
    fn skewed_pointed_cone_still_triangulates() {
        // the naive ray-sum transversal fails for these two rays; the
        // facet-based transversal must not
        let cones = triangulate_cone(&int_rows(&[&[1, 0], &[-1, 3]])).unwrap();
        assert_eq!(cones.len(), 1);
        assert_eq!(cones[0].det(), &Integer::from(3));
    }

    #[test]
    fn unit_square_triangulates_into_two_triangles() {
        let p = convex_hull(&int_pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let tris = triangulate_polytope(&p);
        assert_eq!(tris.len(), 2);
        // areas sum to 1
        let mut total = Rational::new();
        for t in &tris {
            let rows: Vec<Vec<Rational>> = t[1..]
                .iter()
                .map(|v| {
                    v.iter()
                        .zip(&t[0])
                        .map(|(a, b)| Rational::from(a - b))
                        .collect()
                })
                .collect();
            total += vecmat::det(&rows).abs() / Rational::from(2);
        }
        assert_eq!(total, 1);
    }

    #[test]
    fn cone_membership_positions() {
        let cones = triangulate_cone(&int_rows(&[&[1, 0], &[1, 2]])).unwrap();
        let c = &cones[0];
        let pos = |x: i64, y: i64| {
            c.position_of(&[Rational::from(x), Rational::from(y)])
        };
        assert_eq!(pos(1, 1), ConePosition::Interior);
        assert_eq!(pos(1, 0), ConePosition::Boundary);
        assert_eq!(pos(-1, 0), ConePosition::Outside);
        assert_eq!(pos(0, 1), ConePosition::Outside);
    }
}
