//! The deformation gadget h_eps = 1 + (f - 1) k / (k + eps): identically 1
//! on the zero locus of k, and converging to f elsewhere as eps -> 0.

use crate::error::{Result, TregError};
use crate::symbolic::factored::{C64, FactoredFunction};
use crate::symbolic::registry::Registry;

pub struct EpsilonFamily<'a> {
    reg: &'a Registry,
    f: FactoredFunction,
    k: FactoredFunction,
    eps: f64,
}

pub fn epsilon_family<'a>(
    reg: &'a Registry,
    f: &FactoredFunction,
    k: &FactoredFunction,
    eps: f64,
) -> EpsilonFamily<'a> {
    assert!(eps > 0.0, "eps must be positive");
    assert_eq!(f.ambient, k.ambient, "f and k must share an ambient");
    EpsilonFamily {
        reg,
        f: f.clone(),
        k: k.clone(),
        eps,
    }
}

impl EpsilonFamily<'_> {
    pub fn eval(&self, point: &[C64]) -> Result<C64> {
        let kv = match self.reg.eval_factored(&self.k, point) {
            Ok(v) => v,
            Err(TregError::IndeterminateValue) => return Err(TregError::PoleOfKAtPoint),
            Err(e) => return Err(e),
        };
        if kv.norm() == 0.0 {
            return Ok(C64::new(1.0, 0.0));
        }
        let fv = self.reg.eval_factored(&self.f, point)?;
        Ok(C64::new(1.0, 0.0) + (fv - 1.0) * kv / (kv + self.eps))
    }
}
