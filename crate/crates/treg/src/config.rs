//! Runtime configuration and its stable hash.
//!
//! Defaults can be overridden by a `key=value` file pointed at by the
//! `TREG_CONFIG` environment variable, and then by explicit setters (CLI
//! flags). The config hash feeds every emitted report so that runs are
//! attributable to an exact parameter set.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Config {
    /// Absolute tolerance for adaptive quadrature.
    pub tol: f64,
    /// Maximum quadtree subdivision depth.
    pub max_depth: u32,
    /// Monte Carlo sample count.
    pub mc_n: u64,
    /// Monte Carlo seed.
    pub mc_seed: u64,
    /// Series truncation order for lattice functions.
    pub lattice_truncation: u32,
    /// Tolerance for "point lies on curve" checks.
    pub eps_curve: f64,
    /// Tolerance for double-periodicity residuals.
    pub eps_period: f64,
    /// Tolerance for the Weierstrass differential-equation residual.
    pub eps_weier: f64,
    /// Tolerance for numeric reciprocity comparisons (exact inputs give exactly 1).
    pub eps_reciprocity: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            tol: 1e-8,
            max_depth: 14,
            mc_n: 200_000,
            mc_seed: 12345,
            lattice_truncation: 20,
            eps_curve: 1e-10,
            eps_period: 1e-8,
            eps_weier: 1e-9,
            eps_reciprocity: 1e-12,
        }
    }
}

impl Config {
    /// Default config with `TREG_CONFIG` overrides applied when the variable is set.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Ok(path) = std::env::var("TREG_CONFIG") {
            if let Ok(text) = std::fs::read_to_string(Path::new(&path)) {
                cfg.apply_kv_text(&text);
            }
        }
        cfg
    }

    pub fn apply_kv_text(&mut self, text: &str) {
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some((k, v)) = line.split_once('=') {
                self.apply_kv(k.trim(), v.trim());
            }
        }
    }

    pub fn apply_kv(&mut self, key: &str, value: &str) {
        match key {
            "tol" => {
                if let Ok(x) = value.parse() {
                    self.tol = x;
                }
            }
            "max_depth" => {
                if let Ok(x) = value.parse() {
                    self.max_depth = x;
                }
            }
            "mc_n" => {
                if let Ok(x) = value.parse() {
                    self.mc_n = x;
                }
            }
            "mc_seed" => {
                if let Ok(x) = value.parse() {
                    self.mc_seed = x;
                }
            }
            "lattice_truncation" => {
                if let Ok(x) = value.parse() {
                    self.lattice_truncation = x;
                }
            }
            "eps_curve" => {
                if let Ok(x) = value.parse() {
                    self.eps_curve = x;
                }
            }
            "eps_period" => {
                if let Ok(x) = value.parse() {
                    self.eps_period = x;
                }
            }
            "eps_weier" => {
                if let Ok(x) = value.parse() {
                    self.eps_weier = x;
                }
            }
            "eps_reciprocity" => {
                if let Ok(x) = value.parse() {
                    self.eps_reciprocity = x;
                }
            }
            _ => {}
        }
    }

    /// Hex digest of the canonical `key=value` rendering; stable across runs.
    pub fn hash(&self) -> String {
        let canon = format!(
            "eps_curve={:e}\neps_period={:e}\neps_reciprocity={:e}\neps_weier={:e}\n\
             lattice_truncation={}\nmax_depth={}\nmc_n={}\nmc_seed={}\ntol={:e}\n",
            self.eps_curve,
            self.eps_period,
            self.eps_reciprocity,
            self.eps_weier,
            self.lattice_truncation,
            self.max_depth,
            self.mc_n,
            self.mc_seed,
            self.tol
        );
        let digest = Sha256::digest(canon.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        hex[..16].to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kv_overrides() {
        let mut cfg = Config::default();
        cfg.apply_kv_text("tol = 1e-6\n# comment\nmc_seed=7\nbogus=1\n");
        assert_eq!(cfg.tol, 1e-6);
        assert_eq!(cfg.mc_seed, 7);
        assert_eq!(cfg.max_depth, 14);
    }

    #[test]
    fn hash_is_stable_and_sensitive() {
        let a = Config::default();
        let mut b = Config::default();
        assert_eq!(a.hash(), b.hash());
        b.tol = 1e-7;
        assert_ne!(a.hash(), b.hash());
    }
}
