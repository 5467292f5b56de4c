//! The cup-product point pairing: a finite sum of log-norm values at proper
//! intersection points, with an independent circle-mean re-evaluation that
//! exploits harmonicity of the norms.

use crate::error::{Result, TregError};
use num_complex::Complex64;
use std::f64::consts::TAU;

pub type C64 = Complex64;

pub enum Intersection {
    /// Explicit 0-dimensional intersection with the pairing divisor.
    Points(Vec<C64>),
    /// Marker for an improper intersection; always an error.
    NonProper,
}

pub struct CupTerm<'a> {
    pub label: String,
    /// Real coefficient r_i of the ledger term.
    pub coefficient: f64,
    /// log||sigma_i|| on a uniformizing coordinate of Z_i.
    pub evaluator: Box<dyn Fn(C64) -> Result<f64> + 'a>,
    /// Divisor support of sigma_i in the same coordinate.
    pub support: Vec<C64>,
    /// Distance respecting the chart (e.g. modulo the lattice).
    pub distance: Box<dyn Fn(C64, C64) -> f64 + 'a>,
    pub intersection: Intersection,
}

/// sum_i r_i sum_{P in Z_i cap D} log||sigma_i||(P).
/// Preconditions: every intersection is a point list and no point lies in
/// the declared divisor support.
pub fn cup_product_pairing(terms: &[CupTerm], support_tol: f64) -> Result<f64> {
    let mut acc = 0.0;
    for term in terms {
        let points = match &term.intersection {
            Intersection::Points(ps) => ps,
            Intersection::NonProper => {
                return Err(TregError::NonProperIntersection(term.label.clone()))
            }
        };
        for p in points {
            for s in &term.support {
                if (term.distance)(*p, *s) < support_tol {
                    return Err(TregError::IntersectionMeetsSupport);
                }
            }
            acc += term.coefficient * (term.evaluator)(*p)?;
        }
    }
    Ok(acc)
}

/// Mean of the evaluator over a circle; equals the center value for
/// harmonic fields (trapezoid on a circle converges spectrally).
pub fn circle_mean(
    evaluator: &dyn Fn(C64) -> Result<f64>,
    center: C64,
    radius: f64,
    samples: u32,
) -> Result<f64> {
    let mut acc = 0.0;
    for k in 0..samples {
        let phi = TAU * k as f64 / samples as f64;
        acc += evaluator(center + C64::from_polar(radius, phi))?;
    }
    Ok(acc / samples as f64)
}

/// Re-evaluate the pairing with every point value replaced by its
/// circle-mean at the given radius.
pub fn cup_product_pairing_via_means(
    terms: &[CupTerm],
    radius: f64,
    samples: u32,
) -> Result<f64> {
    let mut acc = 0.0;
    for term in terms {
        let points = match &term.intersection {
            Intersection::Points(ps) => ps,
            Intersection::NonProper => {
                return Err(TregError::NonProperIntersection(term.label.clone()))
            }
        };
        for p in points {
            acc += term.coefficient * circle_mean(term.evaluator.as_ref(), *p, radius, samples)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euclid() -> Box<dyn Fn(C64, C64) -> f64> {
        Box::new(|a: C64, b: C64| (a - b).norm())
    }

    #[test]
    fn constant_norms_pair_to_zero() {
        let terms = vec![
            CupTerm {
                label: "one".into(),
                coefficient: 2.0,
                evaluator: Box::new(|_| Ok(0.0)),
                support: vec![],
                distance: euclid(),
                intersection: Intersection::Points(vec![C64::new(0.3, 0.4), C64::new(1.0, -2.0)]),
            },
            CupTerm {
                label: "two".into(),
                coefficient: -5.0,
                evaluator: Box::new(|_| Ok(0.0)),
                support: vec![],
                distance: euclid(),
                intersection: Intersection::Points(vec![C64::new(0.0, 0.0)]),
            },
        ];
        assert_eq!(cup_product_pairing(&terms, 1e-9).unwrap(), 0.0);
    }

    #[test]
    fn single_point_log_abs() {
        // one term, trivial bundle: value is log|f(P)| for f = z - 2
        let p = C64::new(5.0, 0.0);
        let terms = vec![CupTerm {
            label: "f".into(),
            coefficient: 1.0,
            evaluator: Box::new(move |z: C64| Ok((z - 2.0).norm().ln())),
            support: vec![C64::new(2.0, 0.0)],
            distance: euclid(),
            intersection: Intersection::Points(vec![p]),
        }];
        let got = cup_product_pairing(&terms, 1e-9).unwrap();
        assert!((got - 3.0f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn support_collision_detected() {
        let terms = vec![CupTerm {
            label: "f".into(),
            coefficient: 1.0,
            evaluator: Box::new(|_| Ok(0.0)),
            support: vec![C64::new(1.0, 1.0)],
            distance: euclid(),
            intersection: Intersection::Points(vec![C64::new(1.0, 1.0)]),
        }];
        assert!(matches!(
            cup_product_pairing(&terms, 1e-9),
            Err(TregError::IntersectionMeetsSupport)
        ));
    }

    #[test]
    fn non_proper_rejected() {
        let terms = vec![CupTerm {
            label: "bad".into(),
            coefficient: 1.0,
            evaluator: Box::new(|_| Ok(0.0)),
            support: vec![],
            distance: euclid(),
            intersection: Intersection::NonProper,
        }];
        assert!(matches!(
            cup_product_pairing(&terms, 1e-9),
            Err(TregError::NonProperIntersection(_))
        ));
    }

    #[test]
    fn circle_mean_reproduces_harmonic_values() {
        let f = |z: C64| Ok((z - C64::new(3.0, 0.0)).norm().ln());
        let center = C64::new(0.2, -0.7);
        let direct = f(center).unwrap();
        let mean = circle_mean(&f, center, 0.05, 64).unwrap();
        assert!((direct - mean).abs() < 1e-12);
    }
}
