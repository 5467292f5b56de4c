//! Lattice functions via rapidly convergent theta series.
//!
//! Values are computed after reduction to the fundamental parallelogram, with
//! exact quasi-period compensation for the non-periodic functions (sigma,
//! zeta). Direct lattice sums are kept alongside as slow independent oracles;
//! the test suite reconciles the two routes so a convention slip in either
//! cannot survive.

use crate::error::{Result, TregError};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

pub type C64 = Complex64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lattice {
    pub w1: C64,
    pub w2: C64,
}

/// Truncated values of (p, p', sigma, zeta) at one point.
#[derive(Debug, Clone)]
pub struct WeierstrassValues {
    pub p: C64,
    pub p_prime: C64,
    pub sigma: C64,
    pub zeta: C64,
}

impl Lattice {
    pub fn new(w1: C64, w2: C64) -> Result<Self> {
        if w1.norm() == 0.0 || w2.norm() == 0.0 || (w2 / w1).im <= 0.0 {
            return Err(TregError::LatticeDegenerate);
        }
        Ok(Lattice { w1, w2 })
    }

    pub fn tau(&self) -> C64 {
        self.w2 / self.w1
    }

    /// Real coordinates (a, b) with z = a w1 + b w2.
    pub fn coordinates(&self, z: C64) -> (f64, f64) {
        let det = self.w1.re * self.w2.im - self.w1.im * self.w2.re;
        let a = (z.re * self.w2.im - z.im * self.w2.re) / det;
        let b = (self.w1.re * z.im - self.w1.im * z.re) / det;
        (a, b)
    }

    /// Nearest-lattice-point reduction: returns (z_red, m, n) with
    /// z = z_red + m w1 + n w2 and lattice coordinates of z_red in [-1/2, 1/2].
    pub fn reduce(&self, z: C64) -> (C64, i64, i64) {
        let (a, b) = self.coordinates(z);
        let m = a.round();
        let n = b.round();
        let z_red = z - m * self.w1 - n * self.w2;
        (z_red, m as i64, n as i64)
    }

    /// Distance from z to the lattice translate class of a.
    pub fn distance_mod_lattice(&self, z: C64, a: C64) -> f64 {
        let (r, _, _) = self.reduce(z - a);
        r.norm()
    }
}

/// Jacobi theta_1 and derivatives in the variable v, i.e.
/// th1(v) = 2 sum (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v), q = exp(i pi tau).
/// Returns (th1, th1', th1'', th1''') with derivatives taken in v.
fn theta1_all(v: C64, tau: C64, terms: u32) -> (C64, C64, C64, C64) {
    let mut t0 = C64::new(0.0, 0.0);
    let mut t1 = C64::new(0.0, 0.0);
    let mut t2 = C64::new(0.0, 0.0);
    let mut t3 = C64::new(0.0, 0.0);
    for n in 0..=terms {
        let k = 2.0 * n as f64 + 1.0;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        // q^{(n+1/2)^2} with q = exp(i pi tau), branch-safe
        let qpow = (C64::i() * PI * tau * (n as f64 + 0.5) * (n as f64 + 0.5)).exp();
        let arg = k * PI * v;
        let (s, c) = (arg.sin(), arg.cos());
        let w = 2.0 * sign * qpow;
        t0 += w * s;
        t1 += w * k * PI * c;
        t2 -= w * k * k * PI * PI * s;
        t3 -= w * k * k * k * PI * PI * PI * c;
    }
    (t0, t1, t2, t3)
}

/// theta_1 data at v = 0 (only odd derivatives are nonzero there).
fn theta1_at_zero(tau: C64, terms: u32) -> (C64, C64) {
    let (_, d1, _, d3) = theta1_all(C64::new(0.0, 0.0), tau, terms);
    (d1, d3)
}

pub struct LatticeFunctions {
    pub lattice: Lattice,
    terms: u32,
    th1p0: C64,
    /// zeta(w1/2), the half-period eta
    pub eta_half_1: C64,
    /// Full-period quasi-period coefficients: sigma(z + wk) picks up
    /// exp(eta_k (z + wk/2)) up to sign.
    pub eta_1: C64,
    pub eta_2: C64,
}

impl LatticeFunctions {
    pub fn new(lattice: Lattice, terms: u32) -> Self {
        let tau = lattice.tau();
        let (d1, d3) = theta1_at_zero(tau, terms);
        let eta_half_1 = -d3 / (6.0 * lattice.w1 * d1);
        let eta_1 = 2.0 * eta_half_1;
        // Legendre relation eta_1 w2 - eta_2 w1 = 2 pi i fixes the second coefficient.
        let eta_2 = (eta_1 * lattice.w2 - C64::i() * 2.0 * PI) / lattice.w1;
        LatticeFunctions {
            lattice,
            terms,
            th1p0: d1,
            eta_half_1,
            eta_1,
            eta_2,
        }
    }

    fn on_lattice(&self, z_red: C64) -> bool {
        z_red.norm() < 1e-12 * self.lattice.w1.norm()
    }

    /// sigma at a reduced argument (no quasi-period compensation).
    fn sigma_reduced(&self, z_red: C64) -> C64 {
        let w1 = self.lattice.w1;
        let v = z_red / w1;
        let (t0, _, _, _) = theta1_all(v, self.lattice.tau(), self.terms);
        w1 * (self.eta_half_1 * z_red * z_red / w1).exp() * t0 / self.th1p0
    }

    /// sigma(z) for arbitrary z, quasi-periodicity applied exactly.
    pub fn sigma(&self, z: C64) -> C64 {
        let (z_red, m, n) = self.lattice.reduce(z);
        let t = C64::new(m as f64, 0.0) * self.lattice.w1 + C64::new(n as f64, 0.0) * self.lattice.w2;
        let base = self.sigma_reduced(z_red);
        let parity = m + n + m * n;
        let sign = if parity % 2 == 0 { 1.0 } else { -1.0 };
        let eta = C64::new(m as f64, 0.0) * self.eta_1 + C64::new(n as f64, 0.0) * self.eta_2;
        sign * base * (eta * (z_red + 0.5 * t)).exp()
    }

    /// log|sigma(z)|, stable for arguments far outside the fundamental domain.
    pub fn log_abs_sigma(&self, z: C64) -> f64 {
        let (z_red, m, n) = self.lattice.reduce(z);
        let t = C64::new(m as f64, 0.0) * self.lattice.w1 + C64::new(n as f64, 0.0) * self.lattice.w2;
        let base = self.sigma_reduced(z_red).norm().ln();
        let eta = C64::new(m as f64, 0.0) * self.eta_1 + C64::new(n as f64, 0.0) * self.eta_2;
        base + (eta * (z_red + 0.5 * t)).re
    }

    pub fn zeta(&self, z: C64) -> Result<C64> {
        let (z_red, m, n) = self.lattice.reduce(z);
        if self.on_lattice(z_red) {
            return Err(TregError::ZOnLattice);
        }
        let w1 = self.lattice.w1;
        let v = z_red / w1;
        let (t0, t1, _, _) = theta1_all(v, self.lattice.tau(), self.terms);
        let base = self.eta_1 * z_red / w1 + t1 / (w1 * t0);
        Ok(base + C64::new(m as f64, 0.0) * self.eta_1 + C64::new(n as f64, 0.0) * self.eta_2)
    }

    pub fn p(&self, z: C64) -> Result<C64> {
        let (z_red, _, _) = self.lattice.reduce(z);
        if self.on_lattice(z_red) {
            return Err(TregError::ZOnLattice);
        }
        let w1 = self.lattice.w1;
        let v = z_red / w1;
        let (t0, t1, t2, _) = theta1_all(v, self.lattice.tau(), self.terms);
        let lg = t1 / t0;
        Ok(-self.eta_1 / w1 + (lg * lg - t2 / t0) / (w1 * w1))
    }

    pub fn p_prime(&self, z: C64) -> Result<C64> {
        let (z_red, _, _) = self.lattice.reduce(z);
        if self.on_lattice(z_red) {
            return Err(TregError::ZOnLattice);
        }
        let w1 = self.lattice.w1;
        let v = z_red / w1;
        let (t0, t1, t2, t3) = theta1_all(v, self.lattice.tau(), self.terms);
        // d/dv of (t1/t0)^2 - t2/t0, divided by w1^3
        let d_lg = (t2 * t0 - t1 * t1) / (t0 * t0);
        let d_t2t0 = (t3 * t0 - t2 * t1) / (t0 * t0);
        Ok((2.0 * (t1 / t0) * d_lg - d_t2t0) / (w1 * w1 * w1))
    }

    /// Eisenstein invariants from the normalized weight-4/6 q-series.
    pub fn g2_g3(&self) -> (C64, C64) {
        let tau = self.lattice.tau();
        let qq = (C64::i() * 2.0 * PI * tau).exp();
        let mut e4 = C64::new(1.0, 0.0);
        let mut e6 = C64::new(1.0, 0.0);
        let mut qn = qq;
        for n in 1..=self.terms.max(8) {
            let nf = n as f64;
            let frac = qn / (1.0 - qn);
            e4 += 240.0 * nf * nf * nf * frac;
            e6 -= 504.0 * nf * nf * nf * nf * nf * frac;
            qn *= qq;
        }
        let scale = 2.0 * PI / self.lattice.w1;
        let g2 = scale.powu(4) * e4 / 12.0;
        let g3 = scale.powu(6) * e6 / 216.0;
        (g2, g3)
    }

    pub fn values(&self, z: C64) -> Result<WeierstrassValues> {
        Ok(WeierstrassValues {
            p: self.p(z)?,
            p_prime: self.p_prime(z)?,
            sigma: self.sigma(z),
            zeta: self.zeta(z)?,
        })
    }
}

/// Direct lattice-sum oracles over max(|m|,|n|) <= cutoff. Slowly convergent;
/// used to pin down normalization, not for production accuracy.
pub mod direct {
    use super::*;

    fn shells(lat: &Lattice, cutoff: i64) -> impl Iterator<Item = C64> + '_ {
        let w1 = lat.w1;
        let w2 = lat.w2;
        (-cutoff..=cutoff).flat_map(move |m| {
            (-cutoff..=cutoff).filter_map(move |n| {
                if m == 0 && n == 0 {
                    None
                } else {
                    Some(m as f64 * w1 + n as f64 * w2)
                }
            })
        })
    }

    pub fn g2(lat: &Lattice, cutoff: i64) -> C64 {
        60.0 * shells(lat, cutoff).map(|w| 1.0 / w.powu(4)).sum::<C64>()
    }

    pub fn g3(lat: &Lattice, cutoff: i64) -> C64 {
        140.0 * shells(lat, cutoff).map(|w| 1.0 / w.powu(6)).sum::<C64>()
    }

    pub fn p(lat: &Lattice, z: C64, cutoff: i64) -> C64 {
        1.0 / (z * z)
            + shells(lat, cutoff)
                .map(|w| 1.0 / ((z - w) * (z - w)) - 1.0 / (w * w))
                .sum::<C64>()
    }

    pub fn zeta(lat: &Lattice, z: C64, cutoff: i64) -> C64 {
        1.0 / z
            + shells(lat, cutoff)
                .map(|w| 1.0 / (z - w) + 1.0 / w + z / (w * w))
                .sum::<C64>()
    }

    pub fn sigma(lat: &Lattice, z: C64, cutoff: i64) -> C64 {
        let mut acc = z;
        for w in shells(lat, cutoff) {
            acc *= (1.0 - z / w) * (z / w + z * z / (2.0 * w * w)).exp();
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> LatticeFunctions {
        let lat = Lattice::new(C64::new(1.0, 0.0), C64::new(0.0, 1.0)).unwrap();
        LatticeFunctions::new(lat, 20)
    }

    fn skew() -> LatticeFunctions {
        let lat = Lattice::new(C64::new(1.3, 0.1), C64::new(0.4, 1.1)).unwrap();
        LatticeFunctions::new(lat, 20)
    }

    #[test]
    fn degenerate_lattice_rejected() {
        assert!(Lattice::new(C64::new(1.0, 0.0), C64::new(2.0, 0.0)).is_err());
        assert!(Lattice::new(C64::new(0.0, 1.0), C64::new(0.0, 2.0)).is_err());
    }

    #[test]
    fn theta_route_matches_direct_sums() {
        for lf in [square(), skew()] {
            let z = 0.31 * lf.lattice.w1 + 0.17 * lf.lattice.w2;
            let p_fast = lf.p(z).unwrap();
            let p_slow = direct::p(&lf.lattice, z, 60);
            assert!(
                (p_fast - p_slow).norm() < 5e-2 * (1.0 + p_fast.norm()),
                "p mismatch: {p_fast} vs {p_slow}"
            );
            let z_fast = lf.zeta(z).unwrap();
            let z_slow = direct::zeta(&lf.lattice, z, 60);
            assert!((z_fast - z_slow).norm() < 5e-2, "zeta mismatch: {z_fast} vs {z_slow}");
            let s_fast = lf.sigma(z);
            let s_slow = direct::sigma(&lf.lattice, z, 60);
            assert!((s_fast - s_slow).norm() < 5e-2, "sigma mismatch: {s_fast} vs {s_slow}");
            let (g2_fast, g3_fast) = lf.g2_g3();
            let g2_slow = direct::g2(&lf.lattice, 40);
            let g3_slow = direct::g3(&lf.lattice, 40);
            assert!((g2_fast - g2_slow).norm() < 5e-2 * (1.0 + g2_fast.norm()));
            assert!((g3_fast - g3_slow).norm() < 5e-2 * (1.0 + g3_fast.norm()));
        }
    }

    #[test]
    fn eta_matches_direct_zeta_at_half_period() {
        for lf in [square(), skew()] {
            let direct_eta = direct::zeta(&lf.lattice, 0.5 * lf.lattice.w1, 200);
            assert!(
                (lf.eta_half_1 - direct_eta).norm() < 2e-2,
                "eta mismatch: {} vs {direct_eta}",
                lf.eta_half_1
            );
        }
    }

    #[test]
    fn legendre_relation() {
        for lf in [square(), skew()] {
            let rel = lf.eta_1 * lf.lattice.w2 - lf.eta_2 * lf.lattice.w1;
            assert!((rel - C64::i() * 2.0 * PI).norm() < 1e-12);
        }
    }

    #[test]
    fn sigma_normalization_at_origin() {
        for lf in [square(), skew()] {
            let z = C64::new(1e-2, 0.7e-2);
            assert!((lf.sigma(z) / z - 1.0).norm() < 1e-7);
        }
    }

    #[test]
    fn p_is_even_on_sample_grid() {
        let lf = skew();
        for &(a, b) in &[(0.23, 0.11), (0.41, 0.37), (0.13, 0.49), (0.05, 0.31)] {
            let z = a * lf.lattice.w1 + b * lf.lattice.w2;
            let d = (lf.p(z).unwrap() - lf.p(-z).unwrap()).norm();
            assert!(d < 1e-10, "evenness residual {d}");
        }
    }

    #[test]
    fn differential_equation_residual() {
        // (p')^2 = 4 p^3 - g2 p - g3 with g2, g3 from the independent
        // weight-4/6 series; residual under 1e-9 across a 10x10 grid of the
        // fundamental domain (cells touching the lattice point excluded).
        for lf in [square(), skew()] {
            let (g2, g3) = lf.g2_g3();
            let mut worst: f64 = 0.0;
            for i in 1..10 {
                for j in 1..10 {
                    let z = (i as f64 / 10.0) * lf.lattice.w1 + (j as f64 / 10.0) * lf.lattice.w2;
                    let p = lf.p(z).unwrap();
                    let pp = lf.p_prime(z).unwrap();
                    let res = (pp * pp - (4.0 * p.powu(3) - g2 * p - g3)).norm();
                    worst = worst.max(res);
                }
            }
            assert!(worst < 1e-9, "diffeq residual {worst}");
        }
    }

    #[test]
    fn quasi_periodicity_of_sigma_exact_compensation() {
        let lf = skew();
        let z = C64::new(0.21, 0.13);
        for (k, w, eta) in [(1, lf.lattice.w1, lf.eta_1), (2, lf.lattice.w2, lf.eta_2)] {
            let lhs = lf.sigma(z + w);
            let rhs = -lf.sigma(z) * (eta * (z + 0.5 * w)).exp();
            assert!(
                (lhs - rhs).norm() < 1e-10 * (1.0 + lhs.norm()),
                "quasi-period {k} failed: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn zeta_quasi_periodicity() {
        let lf = square();
        let z = C64::new(0.27, 0.34);
        let a = lf.zeta(z + lf.lattice.w1).unwrap();
        let b = lf.zeta(z).unwrap() + lf.eta_1;
        assert!((a - b).norm() < 1e-11);
    }

    #[test]
    fn lattice_point_rejected() {
        let lf = square();
        assert!(matches!(
            lf.p(C64::new(3.0, 2.0)),
            Err(TregError::ZOnLattice)
        ));
    }
}
