//! Exact valuation and tame-symbol calculus over a factor registry.

pub mod factored;
pub mod registry;
pub mod symbol;

pub use factored::{BundleTag, FactoredFunction, PolyEval, PolyTerm};
pub use registry::{AmbientInfo, AmbientKind, ComponentInfo, FactorInfo, Registry, RegistryFact};
pub use symbol::{
    boundary_squared, full_boundary, higher_tame, steinberg_image_check, tame_symbol,
    weil_reciprocity, BoundaryTerm, MilnorSymbol, SteinbergReport, SymbolBoundary, TorsionMode,
};
