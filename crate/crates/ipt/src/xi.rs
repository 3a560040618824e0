//! Evaluation points: exact rational frequencies, real frequencies, and the
//! fixed algebraic signature point built from prime square roots.

use rug::{Float, Integer, Rational};

use crate::prec::{
    dot_int_float, float_of_rational, guarded, pi, tolerance, unit_phase_rational,
    unit_phase_real, PrecComplex, MIN_PREC,
};

/// A frequency vector. Rational coordinates are carried exactly and phases
/// are reduced mod 1 before any floating-point work; real coordinates go
/// through arbitrary-precision arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub enum Xi {
    Rational(Vec<Rational>),
    Real(Vec<Float>),
}

/// One exact-or-real scalar, as produced by inner products against `Xi`.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(Rational),
    Real(Float),
}

impl Xi {
    pub fn from_rationals(coords: Vec<Rational>) -> Self {
        Xi::Rational(coords)
    }

    pub fn from_reals(coords: Vec<Float>) -> Self {
        Xi::Real(coords)
    }

    /// Test helper: rational coordinates from `(numerator, denominator)`.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        Xi::Rational(pairs.iter().map(|&(n, d)| Rational::from((n, d))).collect())
    }

    pub fn dim(&self) -> usize {
        match self {
            Xi::Rational(v) => v.len(),
            Xi::Real(v) => v.len(),
        }
    }

    /// `⟨n, ξ⟩` for an integer point.
    pub fn dot_int(&self, n: &[Integer], prec: u32) -> Scalar {
        match self {
            Xi::Rational(v) => Scalar::Rational(lattice_core::vecmat::dot_int_rat(n, v)),
            Xi::Real(v) => Scalar::Real(dot_int_float(n, v, prec)),
        }
    }

    /// `⟨x, ξ⟩` for a rational point.
    pub fn dot_rat(&self, x: &[Rational], prec: u32) -> Scalar {
        match self {
            Xi::Rational(v) => Scalar::Rational(lattice_core::vecmat::dot_rat(x, v)),
            Xi::Real(v) => {
                let mut acc = Float::new(prec);
                for (a, b) in x.iter().zip(v) {
                    acc += Float::with_val(prec, b * &float_of_rational(a, prec));
                }
                Scalar::Real(acc)
            }
        }
    }

    /// `e^(2πi ⟨n, ξ⟩)`.
    pub fn phase(&self, n: &[Integer], prec: u32) -> PrecComplex {
        self.dot_int(n, prec).phase(prec)
    }

    /// Image under the transpose of an integer matrix: `ξ ↦ Mᵀ ξ`.
    pub fn transform_transpose(&self, m: &[Vec<Integer>]) -> Xi {
        match self {
            Xi::Rational(v) => {
                let d = v.len();
                let coords = (0..d)
                    .map(|j| {
                        let mut acc = Rational::new();
                        for (i, row) in m.iter().enumerate() {
                            acc += Rational::from(&v[i] * &row[j]);
                        }
                        acc
                    })
                    .collect();
                Xi::Rational(coords)
            }
            Xi::Real(v) => {
                let d = v.len();
                let prec = v.iter().map(Float::prec).max().unwrap_or(MIN_PREC);
                let coords = (0..d)
                    .map(|j| {
                        let mut acc = Float::new(prec);
                        for (i, row) in m.iter().enumerate() {
                            acc += Float::with_val(prec, &v[i] * &row[j]);
                        }
                        acc
                    })
                    .collect();
                Xi::Real(coords)
            }
        }
    }

    /// Shift by an integer vector.
    pub fn shifted(&self, m: &[Integer]) -> Xi {
        match self {
            Xi::Rational(v) => {
                Xi::Rational(v.iter().zip(m).map(|(a, b)| Rational::from(a + b)).collect())
            }
            Xi::Real(v) => Xi::Real(
                v.iter()
                    .zip(m)
                    .map(|(a, b)| Float::with_val(a.prec(), a + b))
                    .collect(),
            ),
        }
    }

    pub fn negated(&self) -> Xi {
        match self {
            Xi::Rational(v) => Xi::Rational(v.iter().map(|a| -a.clone()).collect()),
            Xi::Real(v) => Xi::Real(v.iter().map(|a| Float::with_val(a.prec(), -a)).collect()),
        }
    }
}

impl Scalar {
    pub fn phase(&self, prec: u32) -> PrecComplex {
        match self {
            Scalar::Rational(q) => unit_phase_rational(q, prec),
            Scalar::Real(x) => unit_phase_real(x, prec),
        }
    }

    pub fn to_float(&self, prec: u32) -> Float {
        match self {
            Scalar::Rational(q) => float_of_rational(q, prec),
            Scalar::Real(x) => Float::with_val(prec, x),
        }
    }

    /// Zero test: exact for rationals, `|x| < 2^(-prec/2)` for reals.
    pub fn is_zero_within(&self, prec: u32) -> bool {
        match self {
            Scalar::Rational(q) => *q == 0,
            Scalar::Real(x) => x.clone().abs() < tolerance(prec),
        }
    }

    pub fn mul(&self, other: &Scalar, prec: u32) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Rational::from(a * b)),
            _ => Scalar::Real(Float::with_val(
                prec,
                self.to_float(prec) * other.to_float(prec),
            )),
        }
    }
}

/// The algebraic evaluation point `(√2/π, √3/π, …, √p_d/π)` over the first
/// `d` primes.
#[derive(Debug, Clone)]
pub struct SignaturePoint {
    dim: usize,
    coords: Vec<Float>,
    prec_bits: u32,
}

impl SignaturePoint {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &[Float] {
        &self.coords
    }

    pub fn prec_bits(&self) -> u32 {
        self.prec_bits
    }

    pub fn to_xi(&self) -> Xi {
        Xi::Real(self.coords.clone())
    }
}

/// First `d` primes.
pub fn first_primes(d: usize) -> Vec<u32> {
    let mut primes = Vec::with_capacity(d);
    let mut n = 2u32;
    while primes.len() < d {
        if primes.iter().all(|p| n % p != 0) {
            primes.push(n);
        }
        n += 1;
    }
    primes
}

/// The signature point in dimension `d ≥ 1` at the requested precision.
pub fn xi_star(d: usize, prec: u32) -> SignaturePoint {
    assert!(d >= 1, "signature point needs dimension at least 1");
    assert!(prec >= MIN_PREC);
    let wp = guarded(prec);
    let pi_wp = pi(wp);
    let coords = first_primes(d)
        .into_iter()
        .map(|p| {
            let root = Float::with_val(wp, p).sqrt();
            Float::with_val(prec, root / &pi_wp)
        })
        .collect();
    SignaturePoint {
        dim: d,
        coords,
        prec_bits: prec,
    }
}
