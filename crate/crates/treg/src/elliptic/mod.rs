//! Group-law/divisor arithmetic on complex elliptic curves and the numerical
//! Weierstrass machinery behind flat-metric norms.

pub mod curve;
pub mod flatnorm;
pub mod lattice;

pub use curve::{CurvePoint, EllipticCurve, PointDivisor};
pub use flatnorm::FlatNormField;
pub use lattice::{Lattice, LatticeFunctions, WeierstrassValues};
