//! Integrands of the degenerated regulator integrals.
//!
//! After the two-step degeneration the four pairings reduce to planar
//! integrals of log|x + c| kernels against Im(x)/|x|^3 or Re(x)/|x|^3.
//! The unfolded forms are only conditionally convergent at infinity, so the
//! engine carries folded versions over a half plane:
//!
//!   diagonal (1,1):  [log|x+i| - log|x-i|] 2 Im(x)/|x|^3   over Im x > 0
//!   diagonal (2,2):  [log|x+1| - log|x-1|] 2 Re(x)/|x|^3   over Re x > 0
//!
//! and the off-diagonal folds cancel pointwise to exactly zero. Measure
//! convention: plain Lebesgue area dA; the alternative dx^dxbar normalization
//! differs by a factor of |−2i| = 2, which no sign/zero/determinant verdict
//! depends on.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::Arc;

pub type C64 = Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    FullPlane,
    UpperHalf,
    RightHalf,
    Disk(f64),
}

impl Domain {
    /// (theta_lo, theta_hi, u_hi) for the polar rectangle with r = tan(u).
    pub fn polar_rectangle(&self) -> (f64, f64, f64) {
        match self {
            Domain::FullPlane => (-PI, PI, PI / 2.0),
            Domain::UpperHalf => (0.0, PI, PI / 2.0),
            Domain::RightHalf => (-PI / 2.0, PI / 2.0, PI / 2.0),
            Domain::Disk(radius) => (-PI, PI, radius.atan()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayClass {
    AbsolutelyIntegrable,
    FoldRequired,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SymmetryTag {
    OddInIm,
    OddInRe,
    FoldUpperHalf,
    FoldRightHalf,
    None,
}

#[derive(Clone)]
pub struct Integrand {
    pub label: String,
    pub eval: Arc<dyn Fn(C64) -> f64 + Send + Sync>,
    pub singularities: Vec<C64>,
    pub decay: DecayClass,
    pub symmetry: SymmetryTag,
    pub domain: Domain,
}

impl Integrand {
    pub fn eval(&self, x: C64) -> f64 {
        (self.eval)(x)
    }

    /// Integrand times the polar Jacobian under r = tan(u):
    /// F(u, theta) = f(tan(u) e^{i theta}) tan(u) sec^2(u).
    pub fn transformed(&self, u: f64, theta: f64) -> f64 {
        let r = u.tan();
        let sec = 1.0 / u.cos();
        let x = C64::from_polar(r, theta);
        self.eval(x) * r * sec * sec
    }
}

/// log|w| with the convention log|0| = 0, keeping evaluators total at the
/// singular points themselves (they are measure zero for the quadrature).
pub fn safe_ln_abs(w: C64) -> f64 {
    let n = w.norm();
    if n == 0.0 {
        0.0
    } else {
        n.ln()
    }
}

fn im_kernel(x: C64) -> f64 {
    let n = x.norm();
    if n == 0.0 {
        0.0
    } else {
        2.0 * x.im / (n * n * n)
    }
}

fn re_kernel(x: C64) -> f64 {
    let n = x.norm();
    if n == 0.0 {
        0.0
    } else {
        2.0 * x.re / (n * n * n)
    }
}

/// The folded integrand for the (i, j) entry of the pairing matrix,
/// i indexing the form and j the function. Off-diagonal folds are computed
/// as the literal sum over the reflection pair and cancel exactly.
pub fn theorem_integrand(i: usize, j: usize) -> Integrand {
    let eye = C64::new(0.0, 1.0);
    match (i, j) {
        (1, 1) => Integrand {
            label: "eta1-f1".into(),
            eval: Arc::new(move |x| (safe_ln_abs(x + eye) - safe_ln_abs(x - eye)) * im_kernel(x)),
            singularities: vec![C64::new(0.0, 0.0), eye],
            decay: DecayClass::AbsolutelyIntegrable,
            symmetry: SymmetryTag::FoldUpperHalf,
            domain: Domain::UpperHalf,
        },
        (2, 2) => Integrand {
            label: "eta2-f2".into(),
            eval: Arc::new(move |x| {
                (safe_ln_abs(x + 1.0) - safe_ln_abs(x - 1.0)) * re_kernel(x)
            }),
            singularities: vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
            decay: DecayClass::AbsolutelyIntegrable,
            symmetry: SymmetryTag::FoldRightHalf,
            domain: Domain::RightHalf,
        },
        (1, 2) => Integrand {
            label: "eta1-f2".into(),
            // fold of log|x+1| 2Im(x)/|x|^3 across the real axis: exact zero
            eval: Arc::new(move |x| {
                let g = |y: C64| safe_ln_abs(y + 1.0) * im_kernel(y);
                g(x) + g(x.conj())
            }),
            singularities: vec![C64::new(0.0, 0.0)],
            decay: DecayClass::AbsolutelyIntegrable,
            symmetry: SymmetryTag::OddInIm,
            domain: Domain::UpperHalf,
        },
        (2, 1) => Integrand {
            label: "eta2-f1".into(),
            // fold of log|x+i| 2Re(x)/|x|^3 across the imaginary axis: exact zero
            eval: Arc::new(move |x| {
                let g = |y: C64| safe_ln_abs(y + eye) * re_kernel(y);
                g(x) + g(-x.conj())
            }),
            singularities: vec![C64::new(0.0, 0.0)],
            decay: DecayClass::AbsolutelyIntegrable,
            symmetry: SymmetryTag::OddInRe,
            domain: Domain::RightHalf,
        },
        _ => panic!("matrix indices run over {{1,2}}"),
    }
}

/// The unfolded integrand over the full plane: refused by the adaptive
/// engine (only conditionally convergent), accepted by the symmetric
/// Monte Carlo estimator.
pub fn theorem_integrand_unfolded(i: usize, j: usize) -> Integrand {
    let eye = C64::new(0.0, 1.0);
    let (label, eval, symmetry): (&str, Arc<dyn Fn(C64) -> f64 + Send + Sync>, _) = match (i, j) {
        (1, 1) => (
            "eta1-f1-unfolded",
            Arc::new(move |x: C64| safe_ln_abs(x + eye) * im_kernel(x)),
            SymmetryTag::None,
        ),
        (1, 2) => (
            "eta1-f2-unfolded",
            Arc::new(move |x: C64| safe_ln_abs(x + 1.0) * im_kernel(x)),
            SymmetryTag::OddInIm,
        ),
        (2, 1) => (
            "eta2-f1-unfolded",
            Arc::new(move |x: C64| safe_ln_abs(x + eye) * re_kernel(x)),
            SymmetryTag::OddInRe,
        ),
        (2, 2) => (
            "eta2-f2-unfolded",
            Arc::new(move |x: C64| safe_ln_abs(x + 1.0) * re_kernel(x)),
            SymmetryTag::None,
        ),
        _ => panic!("matrix indices run over {{1,2}}"),
    };
    Integrand {
        label: label.into(),
        eval,
        singularities: vec![C64::new(0.0, 0.0)],
        decay: DecayClass::FoldRequired,
        symmetry,
        domain: Domain::FullPlane,
    }
}

/// Constant test integrand over a disk.
pub fn constant_on_disk(value: f64, radius: f64) -> Integrand {
    Integrand {
        label: "disk-unit".into(),
        eval: Arc::new(move |_| value),
        singularities: vec![],
        decay: DecayClass::AbsolutelyIntegrable,
        symmetry: SymmetryTag::None,
        domain: Domain::Disk(radius),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_value_at_center_of_fold() {
        // at x = i the singular log term is suppressed and the kernel is 2
        let g = theorem_integrand(1, 1);
        let v = g.eval(C64::new(0.0, 1.0));
        assert!((v - 2.0 * 2.0f64.ln()).abs() < 1e-15);
        // positive everywhere on the open upper half plane
        for &(re, im) in &[(0.3, 0.2), (-1.5, 0.7), (4.0, 3.0), (0.0, 0.01)] {
            assert!(g.eval(C64::new(re, im)) > 0.0);
        }
    }

    #[test]
    fn off_diagonal_folds_are_pointwise_zero() {
        let g12 = theorem_integrand(1, 2);
        let g21 = theorem_integrand(2, 1);
        for &(re, im) in &[(0.4, 0.8), (2.0, 0.1), (-0.7, 1.3), (5.0, 2.0)] {
            assert_eq!(g12.eval(C64::new(re, im)), 0.0);
            assert_eq!(g21.eval(C64::new(im, re)), 0.0);
        }
    }

    #[test]
    fn near_origin_asymptotics() {
        // (1,1) behaves like 4 Im(x)^2/|x|^3 near 0
        let g = theorem_integrand(1, 1);
        for &r in &[1e-4, 1e-6] {
            let x = C64::from_polar(r, 1.1);
            let expect = 4.0 * x.im * x.im / (r * r * r);
            let got = g.eval(x);
            assert!(
                (got - expect).abs() < 1e-3 * expect.abs(),
                "r={r}: {got} vs {expect}"
            );
        }
    }

    #[test]
    fn polar_transform_bounded_at_ends() {
        // integrand x Jacobian stays bounded toward r -> 0 and r -> infinity
        // (u near 0 and pi/2 correspond to r about 1e-6 and 1e6)
        for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let g = theorem_integrand(i, j);
            let (t_lo, t_hi, _) = g.domain.polar_rectangle();
            let theta = 0.5 * (t_lo + t_hi) + 0.37;
            for &u in &[1e-6f64, (PI / 2.0) - 1e-6] {
                let v = g.transformed(u, theta);
                assert!(
                    v.is_finite() && v.abs() < 10.0,
                    "({i},{j}) unbounded transform: {v}"
                );
            }
        }
    }
}
