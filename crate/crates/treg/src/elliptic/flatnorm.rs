//! Harmonic log-norm fields for sections of flat line bundles on C/Lambda.
//!
//! For a degree-0 divisor sum n_i (a_i) the field is
//!     F(z) = sum_i n_i log|sigma(z - a_i)| + Re(kappa z) + const,
//! where kappa is solved from the sigma quasi-period coefficients so that F is
//! doubly periodic. log|sigma| is harmonic away from its zero, so F is
//! harmonic off the divisor support; the linear term keeps it so.
//!
//! The additive constant is a free normalization (no canonical choice is
//! imposed); every shipped check is insensitive to it.

use super::lattice::{Lattice, LatticeFunctions};
use crate::error::{Result, TregError};
use num_complex::Complex64;

pub type C64 = Complex64;

pub struct FlatNormField {
    pub functions: LatticeFunctions,
    pub divisor: Vec<(C64, i64)>,
    /// Quasi-period correction coefficients (Re kappa, Im kappa).
    pub kappa: C64,
    pub constant: f64,
}

impl FlatNormField {
    pub fn new(lattice: Lattice, divisor: Vec<(C64, i64)>, terms: u32, constant: f64) -> Result<Self> {
        let deg: i64 = divisor.iter().map(|(_, n)| n).sum();
        if deg != 0 {
            return Err(TregError::NonzeroDegree(deg));
        }
        let functions = LatticeFunctions::new(lattice, terms);
        // A = sum n_i a_i; require Re(kappa w_k) = Re(eta_k A) for k = 1, 2.
        let a_sum: C64 = divisor
            .iter()
            .map(|(a, n)| C64::new(*n as f64, 0.0) * a)
            .sum();
        let r1 = (functions.eta_1 * a_sum).re;
        let r2 = (functions.eta_2 * a_sum).re;
        let (w1, w2) = (functions.lattice.w1, functions.lattice.w2);
        // [Re w1, -Im w1; Re w2, -Im w2] [Re k; Im k] = [r1; r2]
        let det = -w1.re * w2.im + w1.im * w2.re;
        let kre = (-r1 * w2.im + r2 * w1.im) / det;
        let kim = (w1.re * r2 - w2.re * r1) / det;
        Ok(FlatNormField {
            functions,
            divisor,
            kappa: C64::new(kre, kim),
            constant,
        })
    }

    /// Trivial-bundle field: empty divisor, constant norm.
    pub fn trivial(lattice: Lattice, terms: u32, constant: f64) -> Self {
        FlatNormField::new(lattice, vec![], terms, constant).expect("empty divisor has degree 0")
    }

    pub fn support_distance(&self, z: C64) -> f64 {
        self.divisor
            .iter()
            .map(|(a, _)| self.functions.lattice.distance_mod_lattice(z, *a))
            .fold(f64::INFINITY, f64::min)
    }

    /// The harmonic log-norm at z. Errors on (a lattice translate of) the support.
    pub fn log_norm(&self, z: C64) -> Result<f64> {
        if self.support_distance(z) < 1e-12 {
            return Err(TregError::EvaluationAtSupport);
        }
        let mut acc = self.constant + (self.kappa * z).re;
        for (a, n) in &self.divisor {
            acc += *n as f64 * self.functions.log_abs_sigma(z - a);
        }
        Ok(acc)
    }

    /// Max |F(z + w_k) - F(z)| over a coarse interior grid; doubly periodic
    /// fields report values at rounding level.
    pub fn periodicity_residual(&self, grid: u32) -> f64 {
        let (w1, w2) = (self.functions.lattice.w1, self.functions.lattice.w2);
        let mut worst: f64 = 0.0;
        for i in 1..grid {
            for j in 1..grid {
                let z = (i as f64 / grid as f64) * w1 + (j as f64 / grid as f64) * w2;
                if self.support_distance(z) < 0.05
                    || self.support_distance(z + w1) < 0.05
                    || self.support_distance(z + w2) < 0.05
                {
                    continue;
                }
                let f = self.log_norm(z).unwrap();
                let f1 = self.log_norm(z + w1).unwrap();
                let f2 = self.log_norm(z + w2).unwrap();
                worst = worst.max((f1 - f).abs()).max((f2 - f).abs());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> FlatNormField {
        let lat = Lattice::new(C64::new(1.0, 0.0), C64::new(0.15, 1.05)).unwrap();
        FlatNormField::new(
            lat,
            vec![(C64::new(0.31, 0.22), 1), (C64::new(-0.12, 0.41), -1)],
            20,
            0.0,
        )
        .unwrap()
    }

    #[test]
    fn trivial_bundle_is_constant() {
        let lat = Lattice::new(C64::new(1.0, 0.0), C64::new(0.0, 1.0)).unwrap();
        let f = FlatNormField::trivial(lat, 20, 1.75);
        for &(x, y) in &[(0.1, 0.2), (0.7, 0.4), (-2.3, 5.1)] {
            assert_eq!(f.log_norm(C64::new(x, y)).unwrap(), 1.75);
        }
    }

    #[test]
    fn degree_must_vanish() {
        let lat = Lattice::new(C64::new(1.0, 0.0), C64::new(0.0, 1.0)).unwrap();
        let r = FlatNormField::new(lat, vec![(C64::new(0.3, 0.3), 2)], 20, 0.0);
        assert!(matches!(r, Err(TregError::NonzeroDegree(2))));
    }

    #[test]
    fn double_periodicity() {
        let f = field();
        assert!(f.periodicity_residual(7) < 1e-8);
    }

    #[test]
    fn log_singularity_order() {
        // F(z) - n log|z - a| stays bounded as z -> a
        let f = field();
        let a = C64::new(0.31, 0.22);
        let mut vals = vec![];
        for k in 3..9 {
            let dz = C64::new(10f64.powi(-k), 0.5 * 10f64.powi(-k));
            let v = f.log_norm(a + dz).unwrap() - dz.norm().ln();
            vals.push(v);
        }
        let spread = vals
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
            - vals.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(spread < 1e-3, "bounded part drifted by {spread}");
    }

    #[test]
    fn five_point_laplacian_small_away_from_support() {
        // flatness in discrete form: the Laplacian residual is pure
        // discretization error at points well off the support
        let f = field();
        let h = 5e-4;
        for &(x, y) in &[(0.55, 0.72), (0.62, 0.80), (0.70, 0.87)] {
            let z = C64::new(x, y);
            assert!(f.support_distance(z) >= 0.1);
            let lap = (f.log_norm(z + C64::new(h, 0.0)).unwrap()
                + f.log_norm(z - C64::new(h, 0.0)).unwrap()
                + f.log_norm(z + C64::new(0.0, h)).unwrap()
                + f.log_norm(z - C64::new(0.0, h)).unwrap()
                - 4.0 * f.log_norm(z).unwrap())
                / (h * h);
            assert!(lap.abs() < 1e-5, "laplacian {lap}");
        }
    }

    #[test]
    fn evaluation_at_support_rejected() {
        let f = field();
        let (w1, w2) = (f.functions.lattice.w1, f.functions.lattice.w2);
        let at = C64::new(0.31, 0.22) + 3.0 * w1 - 2.0 * w2;
        assert!(matches!(f.log_norm(at), Err(TregError::EvaluationAtSupport)));
    }
}
