//! Numerical regulator engine: folded integrands, adaptive quadrature, the
//! seeded Monte Carlo oracle, the surjectivity determinant, the cup-product
//! point pairing, and harmonicity checking.

pub mod adaptive;
pub mod harmonic;
pub mod integrand;
pub mod mc;
pub mod pairing;
pub mod r22;
pub mod surjectivity;

pub use adaptive::{integrate_c, QuadratureResult};
pub use harmonic::{harmonicity_check, loglog_slope, GridSpec, HarmonicityReport};
pub use integrand::{
    constant_on_disk, safe_ln_abs, theorem_integrand, theorem_integrand_unfolded, DecayClass,
    Domain, Integrand, SymmetryTag,
};
pub use mc::{mc_oracle, McEstimate};
pub use pairing::{circle_mean, cup_product_pairing, cup_product_pairing_via_means, CupTerm, Intersection};
pub use r22::PathIntegrand;
pub use surjectivity::{surjectivity_report, EntryReport, Interval, SurjectivityReport, DIAGONAL_REFERENCE};
