//! The 2x2 pairing matrix, its interval determinant, and the verdict.

use super::adaptive::{integrate_c, QuadratureResult};
use super::integrand::theorem_integrand;
use super::mc::{mc_oracle, McEstimate};
use crate::config::Config;
use crate::error::Result;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Reference value of the diagonal entries: both folded kernels integrate to
/// exactly 4*pi in the Lebesgue normalization (closed form via the Chebyshev
/// expansion of the log kernel; only the first mode survives). Kept as a
/// cross-check constant; the shipped verdicts never assume it.
pub const DIAGONAL_REFERENCE: f64 = 4.0 * PI;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryReport {
    pub row: usize,
    pub col: usize,
    pub label: String,
    pub quad: QuadratureResult,
    pub mc: McEstimate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn around(value: f64, err: f64) -> Self {
        Interval {
            lo: value - err,
            hi: value + err,
        }
    }

    pub fn mul(self, other: Interval) -> Interval {
        let cands = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ];
        Interval {
            lo: cands.iter().cloned().fold(f64::INFINITY, f64::min),
            hi: cands.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        }
    }

    pub fn sub(self, other: Interval) -> Interval {
        Interval {
            lo: self.lo - other.hi,
            hi: self.hi - other.lo,
        }
    }

    pub fn excludes_zero(&self) -> bool {
        self.lo > 0.0 || self.hi < 0.0
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurjectivityReport {
    pub entries: Vec<EntryReport>,
    pub det: f64,
    pub det_interval: Interval,
    /// True only when the determinant interval excludes zero.
    pub verdict: bool,
    pub config_hash: String,
}

impl SurjectivityReport {
    pub fn entry(&self, row: usize, col: usize) -> &EntryReport {
        self.entries
            .iter()
            .find(|e| e.row == row && e.col == col)
            .expect("2x2 matrix is complete")
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("row,col,label,value,abs_error,nodes,converged,mc_estimate,mc_std_error\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{:.16e},{:.3e},{},{},{:.16e},{:.3e}\n",
                e.row,
                e.col,
                e.label,
                e.quad.value,
                e.quad.abs_error_estimate,
                e.quad.nodes,
                e.quad.converged,
                e.mc.estimate,
                e.mc.std_error
            ));
        }
        out.push_str(&format!(
            "det,,,{:.16e},,,,{},\n",
            self.det, self.verdict
        ));
        out
    }
}

/// Fill the pairing matrix, cross-check every entry against the seeded
/// oracle, and decide det != 0 from interval bounds only. Each entry's
/// interval half-width is floored at the requested tolerance: the engine
/// certifies nothing below the resolution it was asked for, so a hopelessly
/// loose tolerance yields verdict false rather than a lucky true.
pub fn surjectivity_report(cfg: &Config) -> Result<SurjectivityReport> {
    let mut entries = vec![];
    let mut vals = [[Interval { lo: 0.0, hi: 0.0 }; 2]; 2];
    let mut det_point = [[0.0f64; 2]; 2];
    for (idx, (i, j)) in [(1, 1), (1, 2), (2, 1), (2, 2)].into_iter().enumerate() {
        let g = theorem_integrand(i, j);
        let quad = integrate_c(&g, cfg.tol, cfg.max_depth)?;
        let mc = mc_oracle(&g, cfg.mc_seed + idx as u64, cfg.mc_n);
        vals[i - 1][j - 1] =
            Interval::around(quad.value, quad.abs_error_estimate.max(cfg.tol));
        det_point[i - 1][j - 1] = quad.value;
        entries.push(EntryReport {
            row: i,
            col: j,
            label: g.label.clone(),
            quad,
            mc,
        });
    }
    let det_interval = vals[0][0].mul(vals[1][1]).sub(vals[0][1].mul(vals[1][0]));
    let det = det_point[0][0] * det_point[1][1] - det_point[0][1] * det_point[1][0];
    Ok(SurjectivityReport {
        entries,
        det,
        det_interval,
        verdict: det_interval.excludes_zero(),
        config_hash: cfg.hash(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_arithmetic() {
        let a = Interval::around(2.0, 0.1);
        let b = Interval::around(-3.0, 0.2);
        let p = a.mul(b);
        assert!(p.lo <= -6.0 && p.hi >= -6.0);
        assert!(p.excludes_zero());
        let z = Interval::around(0.05, 0.1);
        assert!(!z.excludes_zero());
    }

    #[test]
    fn verdict_fails_with_hopeless_tolerance() {
        // an interval that straddles zero must not produce a positive verdict
        let wide = Interval::around(0.0, 20.0);
        let tight = Interval::around(DIAGONAL_REFERENCE, 1e-6);
        let det = tight.mul(tight).sub(wide.mul(wide));
        assert!(!det.excludes_zero());
    }
}
