//! Five-point Laplacian residuals: the numerical face of flatness.

use crate::error::{Result, TregError};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type C64 = Complex64;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridSpec {
    pub origin: (f64, f64),
    pub spacing: f64,
    pub nx: u32,
    pub ny: u32,
}

impl GridSpec {
    pub fn points(&self) -> Vec<C64> {
        let mut ps = vec![];
        for i in 0..self.nx {
            for j in 0..self.ny {
                ps.push(C64::new(
                    self.origin.0 + i as f64 * self.spacing,
                    self.origin.1 + j as f64 * self.spacing,
                ));
            }
        }
        ps
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HarmonicityReport {
    pub max_laplacian: f64,
    /// max residual / h^2: the constant of the O(h^2) contract.
    pub c_constant: f64,
    pub h: f64,
    pub points: usize,
}

/// Max |five-point Laplacian| of the field over the grid. Grid points closer
/// than 2h to the singular support are a hard error, not a skip.
pub fn harmonicity_check(
    field: &dyn Fn(C64) -> Result<f64>,
    support_distance: &dyn Fn(C64) -> f64,
    grid: &GridSpec,
    h: f64,
) -> Result<HarmonicityReport> {
    let points = grid.points();
    let mut worst: f64 = 0.0;
    for z in &points {
        if support_distance(*z) < 2.0 * h {
            return Err(TregError::GridTouchesSupport);
        }
        let c = field(*z)?;
        let e = field(*z + C64::new(h, 0.0))?;
        let w = field(*z - C64::new(h, 0.0))?;
        let n = field(*z + C64::new(0.0, h))?;
        let s = field(*z - C64::new(0.0, h))?;
        let lap = (e + w + n + s - 4.0 * c) / (h * h);
        worst = worst.max(lap.abs());
    }
    Ok(HarmonicityReport {
        max_laplacian: worst,
        c_constant: worst / (h * h),
        h,
        points: points.len(),
    })
}

/// Least-squares slope of log(residual) against log(h); flat fields land
/// near 2.
pub fn loglog_slope(samples: &[(f64, f64)]) -> f64 {
    let n = samples.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for (h, r) in samples {
        let x = h.ln();
        let y = r.ln();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}
