//! Small exact linear-algebra helpers over arbitrary-size integers and
//! rationals. Row-major `Vec<Vec<_>>` matrices; everything is desk scale, so
//! plain Gaussian elimination with exact pivots is the right tool.

use rug::{Integer, Rational};

pub fn dot_int(a: &[Integer], b: &[Integer]) -> Integer {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Integer::new();
    for (x, y) in a.iter().zip(b) {
        acc += Integer::from(x * y);
    }
    acc
}

pub fn dot_int_rat(a: &[Integer], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::new();
    for (x, y) in a.iter().zip(b) {
        acc += Rational::from(y * x);
    }
    acc
}

pub fn dot_rat(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::new();
    for (x, y) in a.iter().zip(b) {
        acc += Rational::from(x * y);
    }
    acc
}

/// gcd of all entries; zero for the empty or all-zero vector.
pub fn content(v: &[Integer]) -> Integer {
    let mut g = Integer::new();
    for x in v {
        g.gcd_mut(x);
    }
    g
}

/// Scales a rational direction to the primitive integer vector pointing the
/// same way. Returns the zero vector unchanged.
pub fn primitive_direction(v: &[Rational]) -> Vec<Integer> {
    let mut lcm = Integer::from(1);
    for x in v {
        lcm.lcm_mut(x.denom());
    }
    let ints: Vec<Integer> = v
        .iter()
        .map(|x| Integer::from(x.numer() * &lcm) / x.denom())
        .collect();
    let g = content(&ints);
    if g == 0 {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn int_to_rat(v: &[Integer]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from(x)).collect()
}

/// In-place reduced row echelon form; returns the rank. Zero rows sink to the
/// bottom.
pub fn row_reduce(m: &mut Vec<Vec<Rational>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x /= &piv;
        }
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = Rational::from(&m[rank][j] * &f);
                    m[i][j] -= t;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut work = m.to_vec();
    row_reduce(&mut work)
}

/// Determinant of a square rational matrix by fraction-free-ish Gaussian
/// elimination (exact pivots, so ordinary elimination is already exact).
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut a = m.to_vec();
    let mut result = Rational::from(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| a[i][c] != 0) else {
            return Rational::new();
        };
        if p != c {
            a.swap(c, p);
            result = -result;
        }
        let piv = a[c][c].clone();
        result *= &piv;
        for i in c + 1..n {
            if a[i][c] != 0 {
                let f = Rational::from(&a[i][c] / &piv);
                for j in c..n {
                    let t = Rational::from(&a[c][j] * &f);
                    a[i][j] -= t;
                }
            }
        }
    }
    result
}

pub fn det_int(m: &[Vec<Integer>]) -> Integer {
    let rows: Vec<Vec<Rational>> = m.iter().map(|r| int_to_rat(r)).collect();
    let d = det(&rows);
    debug_assert_eq!(*d.denom(), 1);
    d.numer().clone()
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert_eq!(row.len(), n);
            let mut r = row.clone();
            for j in 0..n {
                r.push(Rational::from(u32::from(i == j)));
            }
            r
        })
        .collect();
    // Gauss-Jordan with pivots restricted to the left block
    for c in 0..n {
        let p = (c..n).find(|&i| a[i][c] != 0)?;
        a.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for i in 0..n {
            if i != c && a[i][c] != 0 {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let t = Rational::from(&a[c][j] * &f);
                    a[i][j] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `A x = b` for square nonsingular `A`, or `None` if singular or
/// inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    debug_assert_eq!(b.len(), n);
    let mut work: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let cols = a[0].len();
    row_reduce(&mut work);
    let mut x = vec![Rational::new(); cols];
    for row in &work {
        let Some(lead) = (0..cols).find(|&j| row[j] != 0) else {
            if row[cols] != 0 {
                return None; // inconsistent
            }
            continue;
        };
        x[lead] = Rational::from(&row[cols] / &row[lead]);
    }
    // verify (free variables were set to zero; reject if that fails)
    for (row, rhs) in a.iter().zip(b) {
        if dot_rat(row, &x) != *rhs {
            return None;
        }
    }
    Some(x)
}

/// Basis of the right kernel `{ x : M x = 0 }`.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut work = m.to_vec();
    let rank = row_reduce(&mut work);
    work.truncate(rank);
    let mut pivots = Vec::with_capacity(rank);
    for row in &work {
        let lead = (0..cols).find(|&j| row[j] != 0).expect("nonzero row");
        pivots.push(lead);
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::new(); cols];
        v[free] = Rational::from(1);
        for (row, &p) in work.iter().zip(&pivots) {
            v[p] = -Rational::from(&row[free] / &row[p]);
        }
        basis.push(v);
    }
    basis
}

/// Matrix-vector product `M v` for a rational matrix given by rows.
pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter().map(|row| dot_rat(row, v)).collect()
}

pub fn transpose(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Fractional part in `[0, 1)`.
pub fn fract(q: &Rational) -> Rational {
    let floor = Rational::from(q.floor_ref());
    Rational::from(q - &floor)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn det_and_inverse_agree() {
        let m = vec![
            vec![q(1, 1), q(2, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1), q(3, 1)],
            vec![q(1, 1), q(0, 1), q(1, 1)],
        ];
        assert_eq!(det(&m), q(7, 1));
        let inv = inverse(&m).unwrap();
        for i in 0..3 {
            let col: Vec<Rational> = (0..3).map(|k| inv[k][i].clone()).collect();
            let e = mat_vec(&m, &col);
            for (j, x) in e.iter().enumerate() {
                assert_eq!(*x, q(i64::from(i == j), 1));
            }
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert_eq!(det(&m), q(0, 1));
        assert!(inverse(&m).is_none());
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = vec![vec![q(1, 1), q(1, 1), q(1, 1)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(dot_rat(&m[0], v), q(0, 1));
        }
    }

    #[test]
    fn primitive_direction_clears_denominators() {
        let v = vec![q(-1, 2), q(0, 1), q(3, 4)];
        assert_eq!(
            primitive_direction(&v),
            vec![Integer::from(-2), Integer::from(0), Integer::from(3)]
        );
    }

    #[test]
    fn fract_is_in_unit_interval() {
        assert_eq!(fract(&q(-7, 2)), q(1, 2));
        assert_eq!(fract(&q(5, 3)), q(2, 3));
        assert_eq!(fract(&q(4, 1)), q(0, 1));
    }
}
