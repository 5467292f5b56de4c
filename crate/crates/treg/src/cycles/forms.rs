//! Leg bookkeeping for transcendental differential forms on products of
//! curves, and the restriction-vanishing test.
//!
//! A form is a sum of monomial terms, each assigning one of
//! {none, dz, dzbar, dz^dzbar} to every ambient factor. Restriction to a
//! subvariety substitutes each non-full factor's legs by the parameter legs
//! it depends on. A term dies if a leg lands on a collapsed point factor, or
//! if the substituted holomorphic (or antiholomorphic) legs cannot be
//! completed to an independent system: some subset of legs draws on fewer
//! parameters than its size.

use super::descriptor::{FactorContent, SubvarietyDescriptor};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

pub type C64 = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Leg {
    None,
    Dz,
    Dzbar,
    DzDzbar,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormTerm {
    pub coeff: C64,
    pub legs: Vec<Leg>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormDescriptor {
    pub terms: Vec<FormTerm>,
    pub label: String,
}

impl FormDescriptor {
    /// (p, q) bidegree, which must agree across terms.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let deg = |t: &FormTerm| {
            let p = t
                .legs
                .iter()
                .filter(|l| matches!(l, Leg::Dz | Leg::DzDzbar))
                .count() as u32;
            let q = t
                .legs
                .iter()
                .filter(|l| matches!(l, Leg::Dzbar | Leg::DzDzbar))
                .count() as u32;
            (p, q)
        };
        let mut it = self.terms.iter();
        let first = deg(it.next()?);
        for t in it {
            if deg(t) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Real forms are closed under conjugation (legs swapped, coefficient
    /// conjugated, accounting for the orientation sign of each dz^dzbar).
    pub fn is_real(&self) -> bool {
        let conj_term = |t: &FormTerm| -> (Vec<Leg>, C64) {
            let legs: Vec<Leg> = t
                .legs
                .iter()
                .map(|l| match l {
                    Leg::Dz => Leg::Dzbar,
                    Leg::Dzbar => Leg::Dz,
                    other => *other,
                })
                .collect();
            // each dz^dzbar flips sign under conjugation
            let flips = t.legs.iter().filter(|l| matches!(l, Leg::DzDzbar)).count();
            let sign = if flips % 2 == 0 { 1.0 } else { -1.0 };
            (legs, sign * t.coeff.conj())
        };
        self.terms.iter().all(|t| {
            let (legs, coeff) = conj_term(t);
            self.terms
                .iter()
                .any(|u| u.legs == legs && (u.coeff - coeff).norm() < 1e-12)
        })
    }

    /// dx_i / y_i as a leg pattern: a single dz on factor `i` of `n`.
    pub fn omega(i: usize, n: usize) -> Self {
        let mut legs = vec![Leg::None; n];
        legs[i] = Leg::Dz;
        FormDescriptor {
            terms: vec![FormTerm {
                coeff: C64::new(1.0, 0.0),
                legs,
            }],
            label: format!("omega_{}", i + 1),
        }
    }

    /// w1 ^ conj(w2) + conj(w1) ^ w2 on factors (i, j) of an n-factor product.
    pub fn eta1_on(i: usize, j: usize, n: usize) -> Self {
        let mut a = vec![Leg::None; n];
        a[i] = Leg::Dz;
        a[j] = Leg::Dzbar;
        let mut b = vec![Leg::None; n];
        b[i] = Leg::Dzbar;
        b[j] = Leg::Dz;
        FormDescriptor {
            terms: vec![
                FormTerm {
                    coeff: C64::new(1.0, 0.0),
                    legs: a,
                },
                FormTerm {
                    coeff: C64::new(1.0, 0.0),
                    legs: b,
                },
            ],
            label: "eta1".into(),
        }
    }

    /// i (w1 ^ conj(w2) - conj(w1) ^ w2) on factors (i, j).
    pub fn eta2_on(i: usize, j: usize, n: usize) -> Self {
        let mut a = vec![Leg::None; n];
        a[i] = Leg::Dz;
        a[j] = Leg::Dzbar;
        let mut b = vec![Leg::None; n];
        b[i] = Leg::Dzbar;
        b[j] = Leg::Dz;
        FormDescriptor {
            terms: vec![
                FormTerm {
                    coeff: C64::new(0.0, 1.0),
                    legs: a,
                },
                FormTerm {
                    coeff: C64::new(0.0, -1.0),
                    legs: b,
                },
            ],
            label: "eta2".into(),
        }
    }

    pub fn eta1(n: usize) -> Self {
        Self::eta1_on(0, 1, n)
    }

    pub fn eta2(n: usize) -> Self {
        Self::eta2_on(0, 1, n)
    }

    /// Wedge of two forms on disjoint leg supports.
    pub fn wedge(&self, other: &FormDescriptor, label: &str) -> Self {
        let mut terms = vec![];
        for a in &self.terms {
            for b in &other.terms {
                let legs: Vec<Leg> = a
                    .legs
                    .iter()
                    .zip(b.legs.iter())
                    .map(|(x, y)| match (x, y) {
                        (Leg::None, l) => *l,
                        (l, Leg::None) => *l,
                        (Leg::Dz, Leg::Dzbar) | (Leg::Dzbar, Leg::Dz) => Leg::DzDzbar,
                        _ => panic!("wedge with overlapping legs"),
                    })
                    .collect();
                terms.push(FormTerm {
                    coeff: a.coeff * b.coeff,
                    legs,
                });
            }
        }
        FormDescriptor {
            terms,
            label: label.to_string(),
        }
    }

    /// The real (2,2) form eta = eta1 ^ eta2 with eta1 on factors (1,2) and
    /// eta2 on factors (3,4) of a fourfold.
    pub fn eta_2_2() -> Self {
        Self::eta1_on(0, 1, 4).wedge(&Self::eta2_on(2, 3, 4), "eta1^eta2")
    }
}

/// Does every term of `form` restrict to zero on `v`?
pub fn restriction_vanishes(form: &FormDescriptor, v: &SubvarietyDescriptor) -> bool {
    form.terms.iter().all(|t| term_vanishes(t, v))
}

fn term_vanishes(term: &FormTerm, v: &SubvarietyDescriptor) -> bool {
    // legs after substitution: each carries the set of parameters it can draw on
    let mut hol: Vec<BTreeSet<String>> = vec![];
    let mut anti: Vec<BTreeSet<String>> = vec![];
    for (idx, leg) in term.legs.iter().enumerate() {
        if matches!(leg, Leg::None) {
            continue;
        }
        let deps: BTreeSet<String> = match &v.factors[idx] {
            FactorContent::Point { .. } => return true, // collapsed factor kills the leg
            FactorContent::Full => {
                let mut s = BTreeSet::new();
                s.insert(format!("__full_{idx}"));
                s
            }
            FactorContent::Dependent { params } => params.iter().cloned().collect(),
        };
        match leg {
            Leg::Dz => hol.push(deps),
            Leg::Dzbar => anti.push(deps),
            Leg::DzDzbar => {
                hol.push(deps.clone());
                anti.push(deps);
            }
            Leg::None => unreachable!(),
        }
    }
    violates_hall(&hol) || violates_hall(&anti)
}

/// True when some subset of legs draws on fewer parameters than its size,
/// which forces the wedge to vanish identically.
fn violates_hall(legs: &[BTreeSet<String>]) -> bool {
    let n = legs.len();
    for mask in 1u32..(1 << n) {
        let mut union: BTreeSet<&String> = BTreeSet::new();
        let size = mask.count_ones() as usize;
        for (i, s) in legs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                union.extend(s.iter());
            }
        }
        if union.len() < size {
            return true;
        }
    }
    false
}
