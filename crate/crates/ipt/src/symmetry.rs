//! Central-symmetry testing through vanishing imaginary parts of the
//! transform on a finite group of rational frequencies.

use lattice_core::IntPointSet;
use rug::{Float, Integer, Rational};

use crate::prec::{tolerance, MIN_PREC};
use crate::sigma::sigma_eval;
use crate::xi::Xi;

/// Outcome of a symmetry test, with the exact set oracle kept alongside the
/// Fourier criterion as a diagnostic.
#[derive(Debug, Clone)]
pub struct SymmetryReport {
    /// Even box size: `A` and `-A` both fit in `[-k/2, k/2)^d`.
    pub k: u64,
    /// Imaginary parts of `σ_A(ξ/k)` vanish for every `ξ` in the box.
    pub fourier_symmetric: bool,
    /// Same criterion restricted to `ξ ∈ A` only.
    pub weak_fourier_symmetric: bool,
    /// Exact set oracle `A == -A`.
    pub oracle_symmetric: bool,
    /// Largest `|Im σ_A(ξ/k)|` seen over the box.
    pub max_abs_im: Float,
}

fn box_size(a: &IntPointSet) -> u64 {
    let mut max_abs = Integer::new();
    for p in a {
        for x in p {
            let ax = Integer::from(x.abs_ref());
            if ax > max_abs {
                max_abs = ax;
            }
        }
    }
    // smallest even k with every |coordinate| ≤ k/2 - 1, so the reflected set
    // also fits and reduction mod k cannot alias a point onto its mirror
    2 * (max_abs.to_u64().expect("desk-scale coordinates") + 1)
}

/// Full symmetry diagnostics for `A` at the given precision.
pub fn central_symmetry_report(a: &IntPointSet, prec: u32) -> SymmetryReport {
    assert!(prec >= MIN_PREC);
    let d = a.dim();
    let k = box_size(a);
    let tol = tolerance(prec);
    let oracle_symmetric = a.is_centrally_symmetric();

    let half = (k / 2) as i64;
    let mut fourier_symmetric = true;
    let mut max_abs_im = Float::new(prec);

    let im_at = |xi_int: &[i64]| -> Float {
        let coords: Vec<Rational> = xi_int
            .iter()
            .map(|&x| Rational::from((Integer::from(x), Integer::from(k))))
            .collect();
        let v = sigma_eval(a, &Xi::Rational(coords), prec).expect("matching dimensions");
        v.im().clone().abs()
    };

    if d == 0 || a.is_empty() {
        return SymmetryReport {
            k,
            fourier_symmetric: true,
            weak_fourier_symmetric: true,
            oracle_symmetric,
            max_abs_im,
        };
    }

    let mut cur = vec![-half; d];
    'walk: loop {
        let im = im_at(&cur);
        if im > max_abs_im {
            max_abs_im = im.clone();
        }
        if im >= tol {
            fourier_symmetric = false;
        }
        for j in (0..d).rev() {
            cur[j] += 1;
            if cur[j] < half {
                continue 'walk;
            }
            cur[j] = -half;
        }
        break;
    }

    let weak_fourier_symmetric = a.iter().all(|p| {
        let as_i64: Vec<i64> = p.iter().map(|x| x.to_i64().expect("in box")).collect();
        im_at(&as_i64) < tol
    });

    SymmetryReport {
        k,
        fourier_symmetric,
        weak_fourier_symmetric,
        oracle_symmetric,
        max_abs_im,
    }
}

/// Whether `A = -A`, decided by the Fourier criterion over the whole group
/// box. Agreement with the exact set oracle is checked in debug builds.
pub fn central_symmetry_test(a: &IntPointSet, prec: u32) -> bool {
    let report = central_symmetry_report(a, prec);
    debug_assert_eq!(
        report.fourier_symmetric, report.oracle_symmetric,
        "Fourier criterion and set oracle disagree for {a:?}"
    );
    report.fourier_symmetric
}
