//! The append-only factor registry: ambients, codimension-one components,
//! factor divisors, restriction entries, and named existence facts.
//!
//! Restriction of a factor to a component is corpus data, supplied when the
//! geometry is registered, with all entries for one component computed
//! against the same local equation. Composed restrictions through nested
//! component chains are identified by canonical codimension-two ids.

use super::factored::{C64, FactoredFunction, PolyEval};
use crate::error::{Result, TregError};
use crate::grat::GRat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AmbientKind {
    Curve,
    Surface,
    Product,
    Point,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientInfo {
    pub kind: AmbientKind,
    #[serde(default)]
    pub coords: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentInfo {
    pub ambient: String,
    /// The component viewed as a variety of its own (ambient id; "pt" style
    /// point ambients for components of curves).
    pub variety: String,
    #[serde(default)]
    pub label: String,
    /// component-of-`variety` -> canonical codim-2 id in `ambient`
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub nested: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorInfo {
    pub ambient: String,
    /// Complete divisor: multiplicity against every component it meets.
    #[serde(default)]
    pub divisor: BTreeMap<String, i64>,
    /// Unit-part restriction to each component, as a function on that
    /// component's variety.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub restrictions: BTreeMap<String, FactoredFunction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eval: Option<PolyEval>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegistryFact {
    pub kind: String,
    #[serde(default)]
    pub data: serde_json::Value,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Registry {
    #[serde(default)]
    pub ambients: BTreeMap<String, AmbientInfo>,
    #[serde(default)]
    pub components: BTreeMap<String, ComponentInfo>,
    #[serde(default)]
    pub factors: BTreeMap<String, FactorInfo>,
    #[serde(default)]
    pub steinberg_pairs: Vec<(FactoredFunction, FactoredFunction)>,
    #[serde(default)]
    pub facts: BTreeMap<String, RegistryFact>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    pub fn add_ambient(&mut self, id: &str, kind: AmbientKind, coords: &[&str]) {
        let prev = self.ambients.insert(
            id.to_string(),
            AmbientInfo {
                kind,
                coords: coords.iter().map(|s| s.to_string()).collect(),
            },
        );
        assert!(prev.is_none(), "ambient '{id}' registered twice");
    }

    pub fn add_component(
        &mut self,
        id: &str,
        ambient: &str,
        variety: &str,
        label: &str,
        nested: &[(&str, &str)],
    ) {
        let prev = self.components.insert(
            id.to_string(),
            ComponentInfo {
                ambient: ambient.to_string(),
                variety: variety.to_string(),
                label: label.to_string(),
                nested: nested
                    .iter()
                    .map(|(a, b)| (a.to_string(), b.to_string()))
                    .collect(),
            },
        );
        assert!(prev.is_none(), "component '{id}' registered twice");
    }

    pub fn add_factor(
        &mut self,
        id: &str,
        ambient: &str,
        divisor: &[(&str, i64)],
        restrictions: Vec<(&str, FactoredFunction)>,
        eval: Option<PolyEval>,
    ) {
        let prev = self.factors.insert(
            id.to_string(),
            FactorInfo {
                ambient: ambient.to_string(),
                divisor: divisor.iter().map(|(c, m)| (c.to_string(), *m)).collect(),
                restrictions: restrictions
                    .into_iter()
                    .map(|(c, f)| (c.to_string(), f))
                    .collect(),
                eval,
            },
        );
        assert!(prev.is_none(), "factor '{id}' registered twice");
    }

    pub fn add_steinberg_pair(&mut self, f: FactoredFunction, g: FactoredFunction) {
        self.steinberg_pairs.push((f, g));
    }

    pub fn add_fact(&mut self, name: &str, kind: &str, data: serde_json::Value) {
        self.facts
            .insert(name.to_string(), RegistryFact { kind: kind.to_string(), data });
    }

    /// Append-only union of two registries; ids must not collide.
    pub fn merge(&mut self, other: Registry) {
        for (id, v) in other.ambients {
            assert!(self.ambients.insert(id.clone(), v).is_none(), "ambient '{id}' collides");
        }
        for (id, v) in other.components {
            assert!(self.components.insert(id.clone(), v).is_none(), "component '{id}' collides");
        }
        for (id, v) in other.factors {
            assert!(self.factors.insert(id.clone(), v).is_none(), "factor '{id}' collides");
        }
        self.steinberg_pairs.extend(other.steinberg_pairs);
        for (id, v) in other.facts {
            assert!(self.facts.insert(id.clone(), v).is_none(), "fact '{id}' collides");
        }
    }

    pub fn component(&self, id: &str) -> Result<&ComponentInfo> {
        self.components
            .get(id)
            .ok_or_else(|| TregError::UnregisteredComponent(id.to_string()))
    }

    pub fn factor(&self, id: &str) -> Result<&FactorInfo> {
        self.factors
            .get(id)
            .ok_or_else(|| TregError::UnregisteredFactor(id.to_string()))
    }

    pub fn fact(&self, name: &str) -> Result<&RegistryFact> {
        self.facts
            .get(name)
            .ok_or_else(|| TregError::MissingRegistryFact(name.to_string()))
    }

    /// Components of one ambient, in deterministic id order.
    pub fn components_of(&self, ambient: &str) -> Vec<&str> {
        self.components
            .iter()
            .filter(|(_, c)| c.ambient == ambient)
            .map(|(id, _)| id.as_str())
            .collect()
    }

    /// Canonical codim-2 id reached from `outer` through `inner`.
    pub fn nested_id(&self, outer: &str, inner: &str) -> Result<&str> {
        let info = self.component(outer)?;
        info.nested
            .get(inner)
            .map(|s| s.as_str())
            .ok_or_else(|| TregError::InconsistentNesting(outer.to_string(), inner.to_string()))
    }

    pub fn is_steinberg_pair(&self, a: &FactoredFunction, b: &FactoredFunction) -> bool {
        self.steinberg_pairs
            .iter()
            .any(|(f, g)| (f == a && g == b) || (f == b && g == a))
    }

    /// Exact valuation of `f` along component `comp`.
    pub fn valuation(&self, f: &FactoredFunction, comp: &str) -> Result<i64> {
        let cinfo = self.component(comp)?;
        if cinfo.ambient != f.ambient {
            return Err(TregError::AmbientMismatch(
                cinfo.ambient.clone(),
                f.ambient.clone(),
            ));
        }
        let mut acc = 0i64;
        for (name, e) in &f.exponents {
            let finfo = self.factor(name)?;
            if finfo.ambient != f.ambient {
                return Err(TregError::AmbientMismatch(
                    f.ambient.clone(),
                    finfo.ambient.clone(),
                ));
            }
            acc += e * finfo.divisor.get(comp).copied().unwrap_or(0);
        }
        Ok(acc)
    }

    /// Restriction to `comp` of the unit part `f / pi^{v_comp(f)}`, as a
    /// function on the component's variety. Bundle tags restrict by name.
    pub fn restrict_unit(&self, f: &FactoredFunction, comp: &str) -> Result<FactoredFunction> {
        let cinfo = self.component(comp)?;
        if cinfo.ambient != f.ambient {
            return Err(TregError::AmbientMismatch(
                cinfo.ambient.clone(),
                f.ambient.clone(),
            ));
        }
        let mut out = FactoredFunction::constant_fn(f.constant.clone(), &cinfo.variety);
        out.bundle = f.bundle.clone();
        for (name, e) in &f.exponents {
            let finfo = self.factor(name)?;
            let entry = finfo.restrictions.get(comp).ok_or_else(|| {
                TregError::UnresolvableRestriction(name.clone(), comp.to_string())
            })?;
            out = out.mul(&entry.pow_i(*e));
        }
        Ok(out)
    }

    /// Numeric evaluation of a factored function at an ambient point.
    ///
    /// A vanishing factor contributes its exponent to the zero balance: net
    /// positive order gives 0, anything else (pole or unresolved 0^0 form)
    /// is an indeterminate-value error.
    pub fn eval_factored(&self, f: &FactoredFunction, point: &[C64]) -> Result<C64> {
        let mut zero_balance = 0i64;
        let mut saw_zero = false;
        let mut value = f.constant.to_c64();
        for (name, e) in &f.exponents {
            let finfo = self.factor(name)?;
            let rule = finfo
                .eval
                .as_ref()
                .ok_or_else(|| TregError::UnregisteredFactor(format!("{name} (no eval rule)")))?;
            let v = rule.eval(point);
            if v.norm() < 1e-14 {
                zero_balance += e;
                saw_zero = true;
            } else {
                value *= v.powi(*e as i32);
            }
        }
        if zero_balance > 0 {
            Ok(C64::new(0.0, 0.0))
        } else if zero_balance < 0 || saw_zero {
            Err(TregError::IndeterminateValue)
        } else {
            Ok(value)
        }
    }
}

/// Constant helper used by builders: a constant function on a point ambient.
pub fn point_constant(c: GRat) -> FactoredFunction {
    FactoredFunction::constant_fn(c, "pt")
}
