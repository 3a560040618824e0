//! Arbitrary-precision complex values and phase evaluation.
//!
//! Values carry their working precision in mantissa bits; binary operations
//! promote to the larger of the two precisions. Transcendental constants are
//! computed with guard bits on top of the requested precision.

use rug::float::Constant;
use rug::{Float, Integer, Rational};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Minimum supported precision in mantissa bits.
pub const MIN_PREC: u32 = 64;

/// Guard bits added to intermediate computations.
pub const GUARD_BITS: u32 = 32;

/// Working precision for intermediates at a requested output precision.
pub fn guarded(prec: u32) -> u32 {
    prec + GUARD_BITS
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

pub fn two_pi(prec: u32) -> Float {
    2 * pi(prec)
}

/// Comparison threshold `2^(-prec/2)` used by equality-style tests.
pub fn tolerance(prec: u32) -> Float {
    Float::with_val(prec, Float::i_exp(1, -(prec as i32) / 2))
}

pub fn float_of_rational(q: &Rational, prec: u32) -> Float {
    Float::with_val(prec, q)
}

/// A complex number with explicit precision.
#[derive(Debug, Clone, PartialEq)]
pub struct PrecComplex {
    re: Float,
    im: Float,
}

impl PrecComplex {
    pub fn new(re: Float, im: Float) -> Self {
        let prec = re.prec().max(im.prec()).max(MIN_PREC);
        Self {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn zero(prec: u32) -> Self {
        assert!(prec >= MIN_PREC);
        Self {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        assert!(prec >= MIN_PREC);
        Self {
            re: Float::with_val(prec, 1),
            im: Float::new(prec),
        }
    }

    pub fn from_integer(n: u64, prec: u32) -> Self {
        Self {
            re: Float::with_val(prec.max(MIN_PREC), n),
            im: Float::new(prec.max(MIN_PREC)),
        }
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn prec_bits(&self) -> u32 {
        self.re.prec()
    }

    /// Round to a (usually lower) precision.
    pub fn rounded(&self, prec: u32) -> Self {
        Self {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.prec_bits().max(other.prec_bits());
        Self {
            re: Float::with_val(p, &self.re + &other.re),
            im: Float::with_val(p, &self.im + &other.im),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.prec_bits().max(other.prec_bits());
        Self {
            re: Float::with_val(p, &self.re - &other.re),
            im: Float::with_val(p, &self.im - &other.im),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.prec_bits().max(other.prec_bits());
        let re = Float::with_val(p, &self.re * &other.re) - Float::with_val(p, &self.im * &other.im);
        let im = Float::with_val(p, &self.re * &other.im) + Float::with_val(p, &self.im * &other.re);
        Self {
            re: Float::with_val(p, re),
            im: Float::with_val(p, im),
        }
    }

    pub fn scale(&self, f: &Float) -> Self {
        let p = self.prec_bits().max(f.prec());
        Self {
            re: Float::with_val(p, &self.re * f),
            im: Float::with_val(p, &self.im * f),
        }
    }

    pub fn div_float(&self, f: &Float) -> Self {
        let p = self.prec_bits().max(f.prec());
        Self {
            re: Float::with_val(p, &self.re / f),
            im: Float::with_val(p, &self.im / f),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    /// Multiply by `i^k`.
    pub fn mul_i_pow(&self, k: usize) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => Self {
                re: Float::with_val(self.im.prec(), -&self.im),
                im: self.re.clone(),
            },
            2 => self.neg(),
            _ => Self {
                re: self.im.clone(),
                im: Float::with_val(self.re.prec(), -&self.re),
            },
        }
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    /// `|self - other|` at the larger precision.
    pub fn dist(&self, other: &Self) -> Float {
        self.sub(other).abs()
    }

    /// Decimal digits used when printing at this value's precision.
    pub fn print_digits(&self) -> usize {
        (self.prec_bits() / 3) as usize
    }
}

/// `e^(2πi q)` for an exact rational `q`, reduced mod 1 before any rounding.
pub fn unit_phase_rational(q: &Rational, prec: u32) -> PrecComplex {
    let frac = lattice_core::vecmat::fract(q);
    let theta = Float::with_val(prec, two_pi(prec) * float_of_rational(&frac, prec));
    let (sin, cos) = theta.sin_cos(Float::new(prec));
    PrecComplex { re: cos, im: sin }
}

/// `e^(2πi x)` for a real argument.
pub fn unit_phase_real(x: &Float, prec: u32) -> PrecComplex {
    let theta = Float::with_val(prec, two_pi(prec) * x);
    let (sin, cos) = theta.sin_cos(Float::new(prec));
    PrecComplex { re: cos, im: sin }
}

/// Inner product of an integer point with real coordinates.
pub fn dot_int_float(n: &[Integer], x: &[Float], prec: u32) -> Float {
    debug_assert_eq!(n.len(), x.len());
    let mut acc = Float::new(prec);
    for (a, b) in n.iter().zip(x) {
        acc += Float::with_val(prec, b * a);
    }
    acc
}

pub fn format_decimal(f: &Float, digits: usize) -> String {
    f.to_string_radix(10, Some(digits.max(2)))
}

pub fn parse_decimal(s: &str, prec: u32) -> Option<Float> {
    Float::parse(s.trim()).ok().map(|p| Float::with_val(prec, p))
}

// Wire format: {"re": "...", "im": "...", "prec_bits": N} with prec/3 decimal
// digits.
impl Serialize for PrecComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let digits = self.print_digits();
        let mut s = serializer.serialize_struct("PrecComplex", 3)?;
        s.serialize_field("re", &format_decimal(&self.re, digits))?;
        s.serialize_field("im", &format_decimal(&self.im, digits))?;
        s.serialize_field("prec_bits", &self.prec_bits())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for PrecComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            re: String,
            im: String,
            prec_bits: u32,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.prec_bits < MIN_PREC {
            return Err(D::Error::custom(format!(
                "prec_bits {} below minimum {MIN_PREC}",
                raw.prec_bits
            )));
        }
        let re = parse_decimal(&raw.re, raw.prec_bits)
            .ok_or_else(|| D::Error::custom(format!("bad real part {:?}", raw.re)))?;
        let im = parse_decimal(&raw.im, raw.prec_bits)
            .ok_or_else(|| D::Error::custom(format!("bad imaginary part {:?}", raw.im)))?;
        Ok(PrecComplex { re, im })
    }
}
