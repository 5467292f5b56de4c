//! Error taxonomy shared across the toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TregError {
    // elliptic curves
    #[error("point ({0}, {1}) is not on the curve")]
    PointNotOnCurve(String, String),
    #[error("group law is undefined on a singular/degenerate curve")]
    SingularCurve,
    #[error("divisor has nonzero degree {0}")]
    NonzeroDegree(i64),
    #[error("lattice is degenerate: Im(w2/w1) must be positive")]
    LatticeDegenerate,
    #[error("z lies on the lattice; value undefined")]
    ZOnLattice,
    #[error("evaluation at a divisor support point")]
    EvaluationAtSupport,
    #[error("indeterminate value: vanishing factor with non-positive exponent balance")]
    IndeterminateValue,

    // registry / symbols
    #[error("component '{0}' is not registered")]
    UnregisteredComponent(String),
    #[error("factor '{0}' is not registered")]
    UnregisteredFactor(String),
    #[error("no restriction of factor '{0}' to component '{1}' is registered")]
    UnresolvableRestriction(String, String),
    #[error("components '{0}' / '{1}' have no consistent nesting data")]
    InconsistentNesting(String, String),
    #[error("ambient mismatch: expected '{0}', found '{1}'")]
    AmbientMismatch(String, String),
    #[error("tame-symbol value on '{0}' does not reduce to a constant")]
    CommonComponentUncancelled(String),
    #[error("expected a rational function; section carries a nontrivial bundle tag")]
    NontrivialBundle,
    #[error("no adjacent Steinberg pattern (f,1-f) or (s,-s) found")]
    PatternNotFound,

    // ledgers / completions
    #[error("registry fact '{0}' is required but missing")]
    MissingRegistryFact(String),
    #[error("multiplicities cannot be matched for component '{0}'")]
    MultiplicityMismatch(String),
    #[error("cycle '{0}' referenced but not declared")]
    UnknownCycle(String),
    #[error("descriptor invalid: {0}")]
    BadDescriptor(String),
    #[error("k has a pole at the evaluation point")]
    PoleOfKAtPoint,

    // quadrature
    #[error("integrand requires folding; direct unfolded integration refused")]
    RefusedUnfolded,
    #[error("intersection point lies in a declared divisor support")]
    IntersectionMeetsSupport,
    #[error("intersection with '{0}' is not 0-dimensional")]
    NonProperIntersection(String),
    #[error("grid point within 2h of singular support")]
    GridTouchesSupport,

    // corpus / io
    #[error("corpus invalid: {0}")]
    CorpusInvalid(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, TregError>;
