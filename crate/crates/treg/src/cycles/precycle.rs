//! Precycle triples and formal ledgers of them.
//!
//! A precycle is (section, subvariety, bundle) with a *declared* divisor:
//! the divisor is input data validated for internal consistency, not
//! computed by elimination. A ledger is a twisted cycle exactly when its
//! aggregated divisor is empty.

use super::descriptor::SubvarietyDescriptor;
use crate::error::{Result, TregError};
use crate::symbolic::factored::{BundleTag, FactoredFunction};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Named cycle classes referenced by declared divisors.
pub type CycleTable = BTreeMap<String, SubvarietyDescriptor>;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorEntry {
    pub cycle: String,
    pub mult: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Precycle {
    pub id: String,
    pub section: FactoredFunction,
    /// Name of the carrying subvariety in the cycle table.
    pub variety: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bundle: BundleTag,
    #[serde(default)]
    pub divisor: Vec<DivisorEntry>,
}

impl Precycle {
    pub fn divisor_entries(&self) -> impl Iterator<Item = (&str, i64)> {
        self.divisor.iter().map(|e| (e.cycle.as_str(), e.mult))
    }

    /// Internal consistency against the cycle table: the variety exists,
    /// divisor components exist and lie in the variety in codimension 1,
    /// and trivial-bundle sections have degree-0 declared divisors.
    pub fn validate(&self, cycles: &CycleTable) -> Result<()> {
        let variety = cycles
            .get(&self.variety)
            .ok_or_else(|| TregError::UnknownCycle(self.variety.clone()))?;
        for e in &self.divisor {
            let comp = cycles
                .get(&e.cycle)
                .ok_or_else(|| TregError::UnknownCycle(e.cycle.clone()))?;
            if !variety.contains(comp) {
                return Err(TregError::BadDescriptor(format!(
                    "divisor component '{}' does not lie in '{}' in codimension 1",
                    e.cycle, self.variety
                )));
            }
        }
        if self.bundle.is_empty() && self.section.bundle.is_empty() {
            let deg: i64 = self.divisor.iter().map(|e| e.mult).sum();
            if deg != 0 {
                return Err(TregError::NonzeroDegree(deg));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LedgerTerm {
    pub precycle: Precycle,
    pub coefficient: i64,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Ledger {
    pub ambient: String,
    pub terms: Vec<LedgerTerm>,
}

impl Ledger {
    pub fn new(ambient: &str) -> Self {
        Ledger {
            ambient: ambient.to_string(),
            terms: vec![],
        }
    }

    pub fn push(&mut self, precycle: Precycle, coefficient: i64) {
        if coefficient != 0 {
            self.terms.push(LedgerTerm {
                precycle,
                coefficient,
            });
        }
    }

    pub fn add(&self, other: &Ledger) -> Ledger {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out
    }

    /// Multiplicity-aggregated formal divisor; empty iff twisted cycle.
    pub fn divisor(&self) -> BTreeMap<String, i64> {
        let mut acc: BTreeMap<String, i64> = BTreeMap::new();
        for term in &self.terms {
            for (cycle, mult) in term.precycle.divisor_entries() {
                *acc.entry(cycle.to_string()).or_insert(0) += term.coefficient * mult;
            }
        }
        acc.retain(|_, v| *v != 0);
        acc
    }

    pub fn is_twisted_cycle(&self) -> bool {
        self.divisor().is_empty()
    }
}
