//! Deterministic desk-scale corpora used by separation and spanning tests.

use lattice_core::IntPointSet;
use polytope_geom::{convex_hull, RationalPolytope};
use rug::{Integer, Rational};

/// All `2^N` subsets of the grid `{0..=b_1} × … × {0..=b_d}` in mask order
/// (the empty set first). Guards against grids with more than 20 points.
pub fn grid_subsets(bounds: &[u32]) -> Vec<IntPointSet> {
    let d = bounds.len();
    let mut grid: Vec<Vec<Integer>> = vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::new();
        for p in &grid {
            for x in 0..=b {
                let mut q = p.clone();
                q.push(Integer::from(x));
                next.push(q);
            }
        }
        grid = next;
    }
    let n = grid.len();
    assert!(n <= 20, "grid of {n} points is too large to enumerate subsets");
    (0u32..1 << n)
        .map(|mask| {
            let pts = grid
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, p)| p.clone());
            IntPointSet::new(d, pts).expect("grid dimension is uniform")
        })
        .collect()
}

/// All distinct full-dimensional convex polygons with vertices in the grid
/// `{0..=n}²`, sorted by vertex list.
pub fn convex_polygons_in_square(n: u32) -> Vec<RationalPolytope> {
    let side = (n + 1) as usize;
    let total = side * side;
    assert!(total <= 16, "square grid too large");
    let grid: Vec<Vec<Rational>> = (0..total)
        .map(|k| {
            vec![
                Rational::from((k / side) as u32),
                Rational::from((k % side) as u32),
            ]
        })
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut polys = Vec::new();
    for mask in 1u32..1 << total {
        if mask.count_ones() < 3 {
            continue;
        }
        let pts: Vec<Vec<Rational>> = grid
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p.clone())
            .collect();
        let hull = convex_hull(&pts).expect("grid points are valid");
        if hull.affine_dim() != 2 {
            continue;
        }
        if seen.insert(hull.vertices().to_vec()) {
            polys.push(hull);
        }
    }
    polys.sort_by(|a, b| a.vertices().cmp(b.vertices()));
    polys
}

/// The Reeve tetrahedron `conv{0, e₁, e₂, (1, 1, h)}`.
pub fn reeve_tetrahedron(h: u32) -> RationalPolytope {
    let pts = vec![
        vec![Rational::from(0), Rational::from(0), Rational::from(0)],
        vec![Rational::from(1), Rational::from(0), Rational::from(0)],
        vec![Rational::from(0), Rational::from(1), Rational::from(0)],
        vec![Rational::from(1), Rational::from(1), Rational::from(h)],
    ];
    convex_hull(&pts).expect("valid tetrahedron")
}

/// The index-2 tetrahedron `conv{0, e₁+e₂, e₂+e₃, e₁+e₃}` whose lattice
/// points are exactly its vertices.
pub fn parity_tetrahedron() -> RationalPolytope {
    let pts = vec![
        vec![Rational::from(0), Rational::from(0), Rational::from(0)],
        vec![Rational::from(1), Rational::from(1), Rational::from(0)],
        vec![Rational::from(0), Rational::from(1), Rational::from(1)],
        vec![Rational::from(1), Rational::from(0), Rational::from(1)],
    ];
    convex_hull(&pts).expect("valid tetrahedron")
}
