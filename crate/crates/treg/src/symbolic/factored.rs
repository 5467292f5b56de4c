//! Rational functions and flat-bundle sections as exact products of
//! registered irreducible factors times a Gaussian-rational constant.
//!
//! Representing functions only this way is what makes valuations and
//! restrictions decidable: the divisor of every factor is registry data, so
//! `v_D` is an integer dot product and never a limit.

use crate::grat::GRat;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

pub type C64 = Complex64;

/// Formal tensor monomial of named line bundles; empty means trivial.
pub type BundleTag = BTreeMap<String, i64>;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactoredFunction {
    pub constant: GRat,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub exponents: BTreeMap<String, i64>,
    pub ambient: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bundle: BundleTag,
}

impl FactoredFunction {
    pub fn constant_fn(c: GRat, ambient: &str) -> Self {
        assert!(!c.is_zero(), "section constant must be nonzero");
        FactoredFunction {
            constant: c,
            exponents: BTreeMap::new(),
            ambient: ambient.to_string(),
            bundle: BTreeMap::new(),
        }
    }

    pub fn one(ambient: &str) -> Self {
        Self::constant_fn(GRat::one(), ambient)
    }

    pub fn factor(name: &str, ambient: &str) -> Self {
        let mut exponents = BTreeMap::new();
        exponents.insert(name.to_string(), 1);
        FactoredFunction {
            constant: GRat::one(),
            exponents,
            ambient: ambient.to_string(),
            bundle: BTreeMap::new(),
        }
    }

    pub fn monomial(ambient: &str, c: GRat, powers: &[(&str, i64)]) -> Self {
        let mut f = Self::constant_fn(c, ambient);
        for (name, e) in powers {
            if *e != 0 {
                f.exponents.insert(name.to_string(), *e);
            }
        }
        f
    }

    pub fn with_bundle(mut self, bundle: &[(&str, i64)]) -> Self {
        for (name, e) in bundle {
            if *e != 0 {
                self.bundle.insert(name.to_string(), *e);
            }
        }
        self
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Group identity: the constant-1 rational function of the trivial bundle.
    pub fn is_identity(&self) -> bool {
        self.exponents.is_empty() && self.bundle.is_empty() && self.constant.is_one()
    }

    /// Identity up to 2-torsion: constant +-1, no factors, trivial bundle.
    pub fn is_identity_mod_two(&self) -> bool {
        self.exponents.is_empty()
            && self.bundle.is_empty()
            && (self.constant.is_one() || self.constant.is_minus_one())
    }

    pub fn mul(&self, other: &FactoredFunction) -> FactoredFunction {
        debug_assert_eq!(self.ambient, other.ambient);
        let mut out = self.clone();
        out.constant = &out.constant * &other.constant;
        for (k, e) in &other.exponents {
            let v = out.exponents.entry(k.clone()).or_insert(0);
            *v += e;
            if *v == 0 {
                out.exponents.remove(k);
            }
        }
        for (k, e) in &other.bundle {
            let v = out.bundle.entry(k.clone()).or_insert(0);
            *v += e;
            if *v == 0 {
                out.bundle.remove(k);
            }
        }
        out
    }

    pub fn pow_i(&self, e: i64) -> FactoredFunction {
        let mut out = FactoredFunction::one(&self.ambient);
        if e == 0 {
            return out;
        }
        out.constant = self.constant.pow_i(e);
        for (k, v) in &self.exponents {
            out.exponents.insert(k.clone(), v * e);
        }
        for (k, v) in &self.bundle {
            out.bundle.insert(k.clone(), v * e);
        }
        out
    }

    pub fn inv(&self) -> FactoredFunction {
        self.pow_i(-1)
    }

    pub fn scaled(&self, c: &GRat) -> FactoredFunction {
        let mut out = self.clone();
        out.constant = &out.constant * c;
        out
    }
}

impl fmt::Debug for FactoredFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for (k, e) in &self.exponents {
            write!(f, "*{k}^{e}")?;
        }
        if !self.bundle.is_empty() {
            write!(f, " [")?;
            for (k, e) in &self.bundle {
                write!(f, "{k}^{e} ")?;
            }
            write!(f, "]")?;
        }
        write!(f, " @{}", self.ambient)
    }
}

/// Polynomial evaluation rule for a factor, in ambient coordinates.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyEval {
    /// Sum of coeff * prod coords[i]^pow terms.
    pub terms: Vec<PolyTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyTerm {
    pub coeff: GRat,
    #[serde(default)]
    pub monomial: Vec<(usize, u32)>,
}

impl PolyEval {
    pub fn eval(&self, point: &[C64]) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for t in &self.terms {
            let mut m = t.coeff.to_c64();
            for (idx, pow) in &t.monomial {
                m *= point[*idx].powu(*pow);
            }
            acc += m;
        }
        acc
    }

    /// x_idx - a
    pub fn linear(idx: usize, a: GRat) -> Self {
        PolyEval {
            terms: vec![
                PolyTerm {
                    coeff: GRat::one(),
                    monomial: vec![(idx, 1)],
                },
                PolyTerm {
                    coeff: -a,
                    monomial: vec![],
                },
            ],
        }
    }
}
