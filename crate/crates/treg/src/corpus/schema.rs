//! Versioned JSON schema for corpus files: registries, symbol suites,
//! reciprocity suites, and completion instances. Unknown fields are
//! rejected everywhere.

use crate::cycles::complete::{HyperplaneInstance, ProductInstance};
use crate::error::{Result, TregError};
use crate::symbolic::factored::FactoredFunction;
use crate::symbolic::registry::Registry;
use crate::symbolic::symbol::MilnorSymbol;
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusFile {
    pub schema_version: u32,
    #[serde(default)]
    pub registry: Registry,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub symbol_cases: Vec<SymbolCase>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reciprocity_cases: Vec<ReciprocityCase>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub product_completions: Vec<ProductInstance>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hyperplane_completions: Vec<HyperplaneInstance>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolCase {
    pub id: String,
    /// Short provenance anchor carried into the emitted report.
    #[serde(default)]
    pub anchor: String,
    pub symbol: MilnorSymbol,
    pub check: SymbolCheck,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SymbolCheck {
    /// Aggregated length-2 tame boundary equals this exact formal sum.
    TameGolden { expected: Vec<ExpectedTerm> },
    /// Every component value of the length-2 tame symbol is the identity.
    TameTrivial,
    /// The composite of two boundary layers aggregates to the empty sum.
    BoundarySquaredZero,
    /// Steinberg-pattern symbol: boundary lies in the relation ideal.
    SteinbergTrivial,
    /// Length-2 sanity: the product formula agrees with the signed tame
    /// symbol up to 2-torsion.
    HigherMatchesTame,
    /// The full boundary aggregates to the empty sum.
    ZeroBoundary,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedTerm {
    pub component: String,
    pub base: String,
    pub entries: Vec<FactoredFunction>,
    pub coefficient: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReciprocityCase {
    /// One explicit pair of rational functions on a curve.
    Explicit {
        id: String,
        f: FactoredFunction,
        g: FactoredFunction,
    },
    /// Seeded random monomials in the registered factors of a curve ambient.
    RandomMonomials {
        id: String,
        ambient: String,
        factors: Vec<String>,
        pairs: u32,
        seed: u64,
        max_exp: u32,
    },
}

impl CorpusFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let file: CorpusFile = serde_json::from_str(&text)
            .map_err(|e| TregError::CorpusInvalid(format!("{}: {e}", path.display())))?;
        file.validate()?;
        Ok(file)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    /// Structural validation beyond serde: cross references must resolve and
    /// factored functions must be well formed (nonzero constants, no zero
    /// exponents, so canonical equality is meaningful).
    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(TregError::CorpusInvalid(format!(
                "schema_version {} unsupported (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let reg = &self.registry;
        for (id, comp) in &reg.components {
            if !reg.ambients.contains_key(&comp.ambient) {
                return Err(TregError::CorpusInvalid(format!(
                    "component '{id}' references unknown ambient '{}'",
                    comp.ambient
                )));
            }
            if !reg.ambients.contains_key(&comp.variety) {
                return Err(TregError::CorpusInvalid(format!(
                    "component '{id}' references unknown variety '{}'",
                    comp.variety
                )));
            }
            for inner in comp.nested.keys() {
                let inner_info = reg.components.get(inner).ok_or_else(|| {
                    TregError::CorpusInvalid(format!(
                        "component '{id}' nests unknown component '{inner}'"
                    ))
                })?;
                if inner_info.ambient != comp.variety {
                    return Err(TregError::CorpusInvalid(format!(
                        "component '{id}' nests '{inner}' which lives on '{}' not '{}'",
                        inner_info.ambient, comp.variety
                    )));
                }
            }
        }
        for (id, factor) in &reg.factors {
            if !reg.ambients.contains_key(&factor.ambient) {
                return Err(TregError::CorpusInvalid(format!(
                    "factor '{id}' references unknown ambient '{}'",
                    factor.ambient
                )));
            }
            for comp in factor.divisor.keys() {
                let cinfo = reg.components.get(comp).ok_or_else(|| {
                    TregError::CorpusInvalid(format!(
                        "factor '{id}' has multiplicity against unknown component '{comp}'"
                    ))
                })?;
                if cinfo.ambient != factor.ambient {
                    return Err(TregError::CorpusInvalid(format!(
                        "factor '{id}' has multiplicity against foreign component '{comp}'"
                    )));
                }
            }
            for (comp, restriction) in &factor.restrictions {
                let cinfo = reg.components.get(comp).ok_or_else(|| {
                    TregError::CorpusInvalid(format!(
                        "factor '{id}' restricts to unknown component '{comp}'"
                    ))
                })?;
                if restriction.ambient != cinfo.variety {
                    return Err(TregError::CorpusInvalid(format!(
                        "factor '{id}' restriction to '{comp}' lives on '{}' not '{}'",
                        restriction.ambient, cinfo.variety
                    )));
                }
                well_formed(restriction, &format!("factor '{id}' restriction to '{comp}'"))?;
                for inner in restriction.exponents.keys() {
                    if !reg.factors.contains_key(inner) {
                        return Err(TregError::CorpusInvalid(format!(
                            "factor '{id}' restriction to '{comp}' uses unknown factor '{inner}'"
                        )));
                    }
                }
            }
        }
        for case in &self.symbol_cases {
            if !reg.ambients.contains_key(&case.symbol.base) {
                return Err(TregError::CorpusInvalid(format!(
                    "symbol case '{}' uses unknown base '{}'",
                    case.id, case.symbol.base
                )));
            }
            for entry in &case.symbol.entries {
                if entry.ambient != case.symbol.base {
                    return Err(TregError::CorpusInvalid(format!(
                        "symbol case '{}' mixes ambients",
                        case.id
                    )));
                }
                well_formed(entry, &format!("symbol case '{}'", case.id))?;
                for f in entry.exponents.keys() {
                    if !reg.factors.contains_key(f) {
                        return Err(TregError::CorpusInvalid(format!(
                            "symbol case '{}' uses unknown factor '{f}'",
                            case.id
                        )));
                    }
                }
            }
        }
        for case in &self.reciprocity_cases {
            if let ReciprocityCase::RandomMonomials {
                id, ambient, factors, ..
            } = case
            {
                if !reg.ambients.contains_key(ambient) {
                    return Err(TregError::CorpusInvalid(format!(
                        "reciprocity case '{id}' uses unknown ambient '{ambient}'"
                    )));
                }
                for f in factors {
                    if !reg.factors.contains_key(f) {
                        return Err(TregError::CorpusInvalid(format!(
                            "reciprocity case '{id}' uses unknown factor '{f}'"
                        )));
                    }
                }
            }
        }
        for case in &self.reciprocity_cases {
            if let ReciprocityCase::Explicit { id, f, g } = case {
                well_formed(f, &format!("reciprocity case '{id}'"))?;
                well_formed(g, &format!("reciprocity case '{id}'"))?;
            }
        }
        for inst in &self.hyperplane_completions {
            inst.seed.validate(&inst.cycles)?;
        }
        Ok(())
    }
}

fn well_formed(f: &FactoredFunction, what: &str) -> Result<()> {
    if f.constant.is_zero() {
        return Err(TregError::CorpusInvalid(format!("{what}: zero constant")));
    }
    if f.exponents.values().any(|e| *e == 0) || f.bundle.values().any(|e| *e == 0) {
        return Err(TregError::CorpusInvalid(format!(
            "{what}: explicit zero exponent"
        )));
    }
    Ok(())
}
