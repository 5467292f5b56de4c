//! Exact Gaussian-rational arithmetic.
//!
//! Constants of factored functions live in `Q(i)` so that tame-symbol values
//! and reciprocity products come out exact, not floating-point. Only the
//! handful of field operations the symbol calculus needs are implemented.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element `re + im*i` of the field Q(i).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GRat {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GRat {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// `a + b*i` with integer parts.
    pub fn gaussian(a: i64, b: i64) -> Self {
        GRat {
            re: BigRational::from_integer(BigInt::from(a)),
            im: BigRational::from_integer(BigInt::from(b)),
        }
    }

    pub fn zero() -> Self {
        GRat::from_int(0)
    }

    pub fn one() -> Self {
        GRat::from_int(1)
    }

    pub fn i() -> Self {
        GRat::gaussian(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_minus_one(&self) -> bool {
        self.im.is_zero() && self.re == -BigRational::one()
    }

    /// `|c|^2 = re^2 + im^2`, exact.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let n = self.norm_sq();
        GRat {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }

    pub fn pow_i(&self, e: i64) -> Self {
        if e == 0 {
            return GRat::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = GRat::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Canonical sign: the representative of `{c, -c}` whose first nonzero
    /// coordinate (re, then im) is positive. Used by mod-2-torsion equality.
    pub fn canonical_up_to_sign(&self) -> Self {
        let flip = if !self.re.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        };
        if flip {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Add for &GRat {
    type Output = GRat;
    fn add(self, rhs: &GRat) -> GRat {
        GRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GRat {
    type Output = GRat;
    fn sub(self, rhs: &GRat) -> GRat {
        GRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GRat {
    type Output = GRat;
    fn mul(self, rhs: &GRat) -> GRat {
        GRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GRat {
    type Output = GRat;
    fn div(self, rhs: &GRat) -> GRat {
        self * &rhs.inv()
    }
}

impl Neg for GRat {
    type Output = GRat;
    fn neg(self) -> GRat {
        GRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Debug for GRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else {
            write!(f, "{}{}{}i", self.re, if self.im.is_negative() { "" } else { "+" }, self.im)
        }
    }
}

// Serialized as "re,im" with each part "num/den"; keeps corpus files diffable.
impl Serialize for GRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{},{}", self.re, self.im))
    }
}

impl<'de> Deserialize<'de> for GRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        let parse = |part: &str| -> Result<BigRational, D::Error> {
            part.trim()
                .parse::<BigRational>()
                .map_err(|e| serde::de::Error::custom(format!("bad rational '{part}': {e}")))
        };
        match raw.split_once(',') {
            Some((re, im)) => Ok(GRat::new(parse(re)?, parse(im)?)),
            None => Ok(GRat::new(parse(&raw)?, BigRational::zero())),
        }
    }
}
