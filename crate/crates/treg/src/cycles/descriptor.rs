//! Shape descriptors for the subvarieties the ledger bookkeeping ranges over:
//! products of factor curves, hyperplane slices, projection products, and
//! point fibers inside a product of curves.

use crate::elliptic::curve::CurvePoint;
use crate::error::{Result, TregError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubvarietyKind {
    ProductOfFactors,
    HyperplaneSlice,
    ProjectionProduct,
    PointFiber,
}

/// What one ambient factor contributes to the subvariety.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorContent {
    /// The whole factor curve.
    Full,
    /// A fixed point of the factor.
    Point {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        point: Option<CurvePoint>,
    },
    /// Coordinate depends on the listed parameters of the subvariety.
    Dependent { params: Vec<String> },
}

impl FactorContent {
    pub fn named_point(name: &str) -> Self {
        FactorContent::Point {
            name: name.to_string(),
            point: None,
        }
    }

    pub fn concrete_point(name: &str, p: CurvePoint) -> Self {
        FactorContent::Point {
            name: name.to_string(),
            point: Some(p),
        }
    }

    pub fn dependent(params: &[&str]) -> Self {
        FactorContent::Dependent {
            params: params.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, FactorContent::Point { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubvarietyDescriptor {
    pub kind: SubvarietyKind,
    pub factors: Vec<FactorContent>,
    #[serde(default)]
    pub params: Vec<String>,
    pub codim: u32,
    #[serde(default)]
    pub label: String,
}

impl SubvarietyDescriptor {
    pub fn new(
        kind: SubvarietyKind,
        factors: Vec<FactorContent>,
        params: &[&str],
        label: &str,
    ) -> Result<Self> {
        let dim: usize = factors
            .iter()
            .filter(|f| matches!(f, FactorContent::Full))
            .count()
            + params.len();
        let codim = factors.len() as i64 - dim as i64;
        if codim < 0 {
            return Err(TregError::BadDescriptor(format!(
                "'{label}': dimension {dim} exceeds ambient factor count"
            )));
        }
        let d = SubvarietyDescriptor {
            kind,
            factors,
            params: params.iter().map(|s| s.to_string()).collect(),
            codim: codim as u32,
            label: label.to_string(),
        };
        d.validate()?;
        Ok(d)
    }

    pub fn dim(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| matches!(f, FactorContent::Full))
            .count()
            + self.params.len()
    }

    pub fn validate(&self) -> Result<()> {
        let declared: BTreeSet<&String> = self.params.iter().collect();
        let mut used: BTreeSet<&String> = BTreeSet::new();
        for f in &self.factors {
            if let FactorContent::Dependent { params } = f {
                if params.is_empty() {
                    return Err(TregError::BadDescriptor(format!(
                        "'{}': dependent factor with no parameter flags",
                        self.label
                    )));
                }
                for p in params {
                    if !declared.contains(p) {
                        return Err(TregError::BadDescriptor(format!(
                            "'{}': undeclared parameter '{p}'",
                            self.label
                        )));
                    }
                    used.insert(p);
                }
            }
        }
        if used.len() != declared.len() {
            return Err(TregError::BadDescriptor(format!(
                "'{}': unused declared parameter",
                self.label
            )));
        }
        let expect_codim = self.factors.len() - self.dim();
        if self.codim as usize != expect_codim {
            return Err(TregError::BadDescriptor(format!(
                "'{}': codim {} does not match shape ({} expected)",
                self.label, self.codim, expect_codim
            )));
        }
        match self.kind {
            SubvarietyKind::ProductOfFactors => {
                if self
                    .factors
                    .iter()
                    .any(|f| matches!(f, FactorContent::Dependent { .. }))
                {
                    return Err(TregError::BadDescriptor(format!(
                        "'{}': product-of-factors cannot carry dependent factors",
                        self.label
                    )));
                }
            }
            SubvarietyKind::PointFiber => {
                let mut saw_point = false;
                for f in &self.factors {
                    match f {
                        FactorContent::Point { point, name } => {
                            saw_point = true;
                            if point.is_none() {
                                return Err(TregError::BadDescriptor(format!(
                                    "'{}': point-fiber entry '{name}' lacks concrete coordinates",
                                    self.label
                                )));
                            }
                        }
                        FactorContent::Full => {}
                        FactorContent::Dependent { .. } => {
                            return Err(TregError::BadDescriptor(format!(
                                "'{}': point-fiber cannot carry dependent factors",
                                self.label
                            )));
                        }
                    }
                }
                if !saw_point {
                    return Err(TregError::BadDescriptor(format!(
                        "'{}': point-fiber needs at least one point entry",
                        self.label
                    )));
                }
            }
            SubvarietyKind::HyperplaneSlice => {
                if !self
                    .factors
                    .iter()
                    .all(|f| matches!(f, FactorContent::Dependent { .. }))
                {
                    return Err(TregError::BadDescriptor(format!(
                        "'{}': hyperplane-slice factors must all be parameter-dependent",
                        self.label
                    )));
                }
            }
            SubvarietyKind::ProjectionProduct => {
                let has_dep = self
                    .factors
                    .iter()
                    .any(|f| matches!(f, FactorContent::Dependent { .. }));
                let has_other = self
                    .factors
                    .iter()
                    .any(|f| !matches!(f, FactorContent::Dependent { .. }));
                if !has_dep || !has_other {
                    return Err(TregError::BadDescriptor(format!(
                        "'{}': projection-product needs a moving projection and a complementary part",
                        self.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Structural containment test for a codim-1 cycle inside this variety.
    pub fn contains(&self, component: &SubvarietyDescriptor) -> bool {
        if component.factors.len() != self.factors.len() {
            return false;
        }
        if component.dim() + 1 != self.dim() {
            return false;
        }
        component.factors.iter().zip(self.factors.iter()).all(|(c, v)| {
            match (c, v) {
                (_, FactorContent::Full) => true,
                (FactorContent::Point { name: a, .. }, FactorContent::Point { name: b, .. }) => {
                    a == b
                }
                (FactorContent::Point { .. }, FactorContent::Dependent { .. }) => true,
                (FactorContent::Dependent { .. }, FactorContent::Dependent { .. }) => true,
                _ => false,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::curve::CurvePoint;

    #[test]
    fn point_fiber_requires_concrete_points() {
        let bad = SubvarietyDescriptor::new(
            SubvarietyKind::PointFiber,
            vec![FactorContent::named_point("p"), FactorContent::Full],
            &[],
            "C1 x q",
        );
        assert!(bad.is_err());
        let good = SubvarietyDescriptor::new(
            SubvarietyKind::PointFiber,
            vec![
                FactorContent::concrete_point("p", CurvePoint::affine(0.0, 1.0)),
                FactorContent::Full,
            ],
            &[],
            "p x C2",
        );
        assert!(good.is_ok());
    }

    #[test]
    fn codim_bookkeeping() {
        let s = SubvarietyDescriptor::new(
            SubvarietyKind::HyperplaneSlice,
            vec![
                FactorContent::dependent(&["u", "v"]),
                FactorContent::dependent(&["u", "v"]),
                FactorContent::dependent(&["u", "v"]),
                FactorContent::dependent(&["u", "v"]),
            ],
            &["u", "v"],
            "S",
        )
        .unwrap();
        assert_eq!(s.codim, 2);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn containment_shapes() {
        let z1 = SubvarietyDescriptor::new(
            SubvarietyKind::ProjectionProduct,
            vec![
                FactorContent::dependent(&["t"]),
                FactorContent::dependent(&["t"]),
                FactorContent::dependent(&["t"]),
                FactorContent::Full,
            ],
            &["t"],
            "Z1",
        )
        .unwrap();
        let a_curve = SubvarietyDescriptor::new(
            SubvarietyKind::HyperplaneSlice,
            vec![
                FactorContent::dependent(&["r"]),
                FactorContent::dependent(&["r"]),
                FactorContent::dependent(&["r"]),
                FactorContent::dependent(&["r"]),
            ],
            &["r"],
            "A",
        )
        .unwrap();
        let fiber = SubvarietyDescriptor::new(
            SubvarietyKind::ProductOfFactors,
            vec![
                FactorContent::named_point("a1"),
                FactorContent::named_point("a2"),
                FactorContent::named_point("a3"),
                FactorContent::Full,
            ],
            &[],
            "a x E4",
        )
        .unwrap();
        assert!(z1.contains(&a_curve));
        assert!(z1.contains(&fiber));
        assert!(!fiber.contains(&z1));
    }
}
