//! Builder for the antisymmetric path integrand
//! log|f| dlog|g| - log|g| dlog|f| along user-supplied parametrized paths.
//! Shipped without an acceptance target: the curve-level quadrature it would
//! feed needs surface parametrizations outside this toolkit's scope.

use num_complex::Complex64;

pub type C64 = Complex64;

/// Evaluator of the 1-form at a point with a tangent vector: the caller
/// supplies f, g and their complex derivatives.
pub struct PathIntegrand<'a> {
    pub f: Box<dyn Fn(C64) -> C64 + 'a>,
    pub df: Box<dyn Fn(C64) -> C64 + 'a>,
    pub g: Box<dyn Fn(C64) -> C64 + 'a>,
    pub dg: Box<dyn Fn(C64) -> C64 + 'a>,
}

impl PathIntegrand<'_> {
    /// [log|f| dlog|g| - log|g| dlog|f|](z) applied to the tangent v,
    /// using d log|h| = Re(h'/h dz).
    pub fn eval(&self, z: C64, v: C64) -> f64 {
        let fv = (self.f)(z);
        let gv = (self.g)(z);
        let dlog_f = ((self.df)(z) / fv * v).re;
        let dlog_g = ((self.dg)(z) / gv * v).re;
        fv.norm().ln() * dlog_g - gv.norm().ln() * dlog_f
    }
}
