//! The two completion algorithms: correction of a precycle on a curve inside
//! a product of two curves, and the hypersurface-arrangement correction on a
//! product of four elliptic curves.
//!
//! Both return a ledger with empty aggregated divisor together with a step
//! log. Non-constructive existence inputs (homological HVC representatives,
//! generic-hyperplane irreducibility, Bertini curves through point pairs,
//! Picard restriction) are consumed as named registry facts and cited in the
//! log; they are never computed.

use super::descriptor::{FactorContent, SubvarietyDescriptor, SubvarietyKind};
use super::forms::{restriction_vanishes, FormDescriptor};
use super::precycle::{CycleTable, DivisorEntry, Ledger, Precycle};
use crate::elliptic::curve::CurvePoint;
use crate::error::{Result, TregError};
use crate::symbolic::factored::{BundleTag, FactoredFunction};
use crate::symbolic::registry::Registry;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const FACT_CURVE_EQUIVALENCE: &str =
    "builtin: points on a smooth curve are algebraically equivalent";
pub const FACT_FLAT_SECTION: &str =
    "builtin: a degree-0 divisor class on a smooth curve is the divisor of a flat-bundle section";
pub const FACT_HYPERPLANE_RATIONAL: &str =
    "builtin: any two hyperplane sections are rationally equivalent";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CompletionStep {
    pub action: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precycle: Option<String>,
    /// Equation tag the step realizes, when the construction is numbered.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realizes: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<String>,
    #[serde(default)]
    pub note: String,
    /// Aggregated divisor after this step.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub divisor_after: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CompletionOutcome {
    pub ledger: Ledger,
    pub cycles: CycleTable,
    pub log: Vec<CompletionStep>,
    /// Ledger terms whose variety supports the transcendental form
    /// (everything the completion added must vanish; only the seed survives).
    pub surviving: Vec<String>,
}

impl CompletionOutcome {
    fn audit_surviving(&mut self, form: &FormDescriptor) {
        self.surviving = self
            .ledger
            .terms
            .iter()
            .filter(|t| {
                let d = &self.cycles[&t.precycle.variety];
                !restriction_vanishes(form, d)
            })
            .map(|t| t.precycle.id.clone())
            .collect();
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedPoint {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<CurvePoint>,
}

impl NamedPoint {
    pub fn named(name: &str) -> Self {
        NamedPoint {
            name: name.into(),
            point: None,
        }
    }

    pub fn concrete(name: &str, p: CurvePoint) -> Self {
        NamedPoint {
            name: name.into(),
            point: Some(p),
        }
    }

    fn content(&self) -> FactorContent {
        match &self.point {
            Some(p) => FactorContent::concrete_point(&self.name, *p),
            None => FactorContent::named_point(&self.name),
        }
    }
}

/// Input for the product-of-curves completion: a section on an irreducible
/// curve D inside C1 x C2 whose divisor is a list of points (p_i, q_i) with
/// multiplicities summing to zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductInstance {
    pub id: String,
    pub ambient: String,
    pub seed_id: String,
    pub seed_section: FactoredFunction,
    pub base_point: NamedPoint,
    pub points: Vec<ProductDivisorPoint>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductDivisorPoint {
    pub p: NamedPoint,
    pub q: NamedPoint,
    pub mult: i64,
}

fn point_pair_cycle(p: &NamedPoint, q: &NamedPoint) -> (String, SubvarietyDescriptor) {
    let name = format!("pt({},{})", p.name, q.name);
    let desc = SubvarietyDescriptor::new(
        SubvarietyKind::ProductOfFactors,
        vec![p.content(), q.content()],
        &[],
        &name,
    )
    .expect("a point pair is a valid descriptor");
    (name, desc)
}

/// Complete (f, D) on C1 x C2 to a ledger with empty divisor:
/// vertical corrections on C1 x {q_i} move each p_i to a base point p, and
/// one horizontal correction on {p} x C2 absorbs the remainder.
pub fn complete_on_product(inst: &ProductInstance) -> Result<CompletionOutcome> {
    let total: i64 = inst.points.iter().map(|e| e.mult).sum();
    if total != 0 {
        return Err(TregError::NonzeroDegree(total));
    }
    let mut cycles = CycleTable::new();
    let seed_variety = format!("{}::D", inst.id);
    cycles.insert(
        seed_variety.clone(),
        SubvarietyDescriptor::new(
            SubvarietyKind::HyperplaneSlice,
            vec![
                FactorContent::dependent(&["t"]),
                FactorContent::dependent(&["t"]),
            ],
            &["t"],
            "D",
        )?,
    );
    let mut seed_divisor = vec![];
    for e in &inst.points {
        let (name, desc) = point_pair_cycle(&e.p, &e.q);
        cycles.entry(name.clone()).or_insert(desc);
        seed_divisor.push(DivisorEntry {
            cycle: name,
            mult: e.mult,
        });
    }
    let seed = Precycle {
        id: inst.seed_id.clone(),
        section: inst.seed_section.clone(),
        variety: seed_variety,
        bundle: BundleTag::new(),
        divisor: seed_divisor,
    };

    let mut ledger = Ledger::new(&inst.ambient);
    let mut log = vec![];
    ledger.push(seed.clone(), 1);
    log.push(CompletionStep {
        action: "seed".into(),
        precycle: Some(seed.id.clone()),
        realizes: None,
        facts: vec![],
        note: "input precycle (f, D)".into(),
        divisor_after: ledger.divisor(),
    });

    let p0 = &inst.base_point;
    // vertical corrections sigma_i on C1 x {q_i} with div = n_i (p_i - p)
    for (i, e) in inst.points.iter().enumerate() {
        if e.mult == 0 || e.p.name == p0.name {
            continue; // div(sigma_i) would be empty
        }
        let fiber_name = format!("{}::C1x{}", inst.id, e.q.name);
        let kind = if e.q.point.is_some() {
            SubvarietyKind::PointFiber
        } else {
            SubvarietyKind::ProductOfFactors
        };
        cycles.entry(fiber_name.clone()).or_insert(SubvarietyDescriptor::new(
            kind,
            vec![FactorContent::Full, e.q.content()],
            &[],
            &format!("C1 x {}", e.q.name),
        )?);
        let (plus, plus_desc) = point_pair_cycle(&e.p, &e.q);
        cycles.entry(plus.clone()).or_insert(plus_desc);
        let (minus, minus_desc) = point_pair_cycle(p0, &e.q);
        cycles.entry(minus.clone()).or_insert(minus_desc);
        let sec_id = format!("sigma_{}", i + 1);
        let corr = Precycle {
            id: sec_id.clone(),
            section: FactoredFunction::factor(&format!("{}::{}", inst.id, sec_id), &inst.ambient)
                .with_bundle(&[(&format!("L_{}", i + 1), e.mult)]),
            variety: fiber_name,
            bundle: [(format!("L_{}", i + 1), e.mult)].into_iter().collect(),
            divisor: vec![
                DivisorEntry {
                    cycle: plus,
                    mult: e.mult,
                },
                DivisorEntry {
                    cycle: minus,
                    mult: -e.mult,
                },
            ],
        };
        ledger.push(corr, -1);
        log.push(CompletionStep {
            action: "vertical correction".into(),
            precycle: Some(sec_id),
            realizes: None,
            facts: vec![FACT_CURVE_EQUIVALENCE.into(), FACT_FLAT_SECTION.into()],
            note: format!(
                "div(sigma_{}) = {} ({} - {}) on C1 x {}",
                i + 1,
                e.mult,
                e.p.name,
                p0.name,
                e.q.name
            ),
            divisor_after: ledger.divisor(),
        });
    }

    // horizontal correction sigma_0 on {p} x C2 absorbing sum n_i (p, q_i)
    let residue: Vec<DivisorEntry> = ledger
        .divisor()
        .into_iter()
        .map(|(cycle, mult)| DivisorEntry { cycle, mult })
        .collect();
    if !residue.is_empty() {
        let d0_name = format!("{}::{}xC2", inst.id, p0.name);
        let kind = if p0.point.is_some() {
            SubvarietyKind::PointFiber
        } else {
            SubvarietyKind::ProductOfFactors
        };
        cycles.entry(d0_name.clone()).or_insert(SubvarietyDescriptor::new(
            kind,
            vec![p0.content(), FactorContent::Full],
            &[],
            &format!("{} x C2", p0.name),
        )?);
        let corr = Precycle {
            id: "sigma_0".into(),
            section: FactoredFunction::factor(&format!("{}::sigma_0", inst.id), &inst.ambient)
                .with_bundle(&[("L_0", 1)]),
            variety: d0_name,
            bundle: [("L_0".to_string(), 1)].into_iter().collect(),
            divisor: residue,
        };
        ledger.push(corr, -1);
        log.push(CompletionStep {
            action: "horizontal correction".into(),
            precycle: Some("sigma_0".into()),
            realizes: None,
            facts: vec![FACT_FLAT_SECTION.into()],
            note: format!("div(sigma_0) on {} x C2 absorbs the base-fiber residue", p0.name),
            divisor_after: ledger.divisor(),
        });
    }

    for term in &ledger.terms {
        term.precycle.validate(&cycles)?;
    }
    let mut outcome = CompletionOutcome {
        ledger,
        cycles,
        log,
        surviving: vec![],
    };
    outcome.audit_surviving(&FormDescriptor::eta1(2));
    Ok(outcome)
}

/// Input for the hypersurface-arrangement completion on a product of four
/// elliptic curves.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneInstance {
    pub id: String,
    pub ambient: String,
    pub seed: Precycle,
    pub cycles: CycleTable,
    /// Complete-intersection target A (positive side of the seed divisor).
    pub target_a: String,
    /// Second complete intersection B, or None when the negative side of the
    /// seed divisor is already HVC-shaped.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_b: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
struct HvcPullbackData {
    target: String,
    variety: String,
    section: String,
    bundle: String,
    #[serde(default)]
    point_fibers: Vec<HvcEntry>,
    #[serde(default)]
    projection_points: Vec<HvcEntry>,
}

#[derive(Debug, Clone, Deserialize)]
struct HvcEntry {
    cycle: String,
    mult: i64,
}

#[derive(Debug, Clone, Deserialize)]
struct BertiniData {
    curve: String,
    plus: String,
    minus: String,
    section: String,
    bundle: String,
}

#[derive(Debug, Clone, Deserialize)]
struct ProjectionPairData {
    plus: String,
    via: String,
    minus: String,
    nu_variety: String,
    nu_section: String,
    nu_bundle: String,
    #[serde(default)]
    g_variety: Option<String>,
    #[serde(default)]
    g_section: Option<String>,
}

/// Look up a registry fact by kind within an instance scope: facts named
/// `{scope}/...` belong to that instance, unprefixed facts are global.
fn find_fact<T: serde::de::DeserializeOwned>(
    reg: &Registry,
    scope: &str,
    kind: &str,
    pred: impl Fn(&T) -> bool,
    describe: &str,
) -> Result<(String, T)> {
    let prefix = format!("{scope}/");
    for (name, fact) in &reg.facts {
        if fact.kind != kind {
            continue;
        }
        if name.contains('/') && !name.starts_with(&prefix) {
            continue;
        }
        if let Ok(data) = serde_json::from_value::<T>(fact.data.clone()) {
            if pred(&data) {
                return Ok((name.clone(), data));
            }
        }
    }
    Err(TregError::MissingRegistryFact(format!("{kind} ({describe})")))
}

fn opaque_section(inst_id: &str, name: &str, ambient: &str, power: i64) -> FactoredFunction {
    let mut f = FactoredFunction::one(ambient);
    f.exponents.insert(format!("{inst_id}::{name}"), power);
    f
}

/// Complete a hyperplane-induced precycle on S = H1 . H2 . X to a ledger with
/// empty divisor, consuming the registry facts the construction relies on
/// and logging which numbered relation each correction realizes.
pub fn complete_hyperplane_precycle(
    reg: &Registry,
    inst: &HyperplaneInstance,
) -> Result<CompletionOutcome> {
    let cycles = inst.cycles.clone();
    inst.seed.validate(&cycles)?;

    let mut ledger = Ledger::new(&inst.ambient);
    let mut log = vec![];

    let (picard_name, _) = find_fact::<serde_json::Value>(
        reg,
        &inst.id,
        "picard-restriction",
        |_| true,
        "flat bundles restrict from the ambient fourfold",
    )?;
    let (generic_name, _) = find_fact::<serde_json::Value>(
        reg,
        &inst.id,
        "hyperplane-genericity",
        |_| true,
        "generic hyperplane slices are irreducible",
    )?;

    ledger.push(inst.seed.clone(), 1);
    log.push(CompletionStep {
        action: "seed".into(),
        precycle: Some(inst.seed.id.clone()),
        realizes: None,
        facts: vec![picard_name, generic_name],
        note: "input precycle on S".into(),
        divisor_after: ledger.divisor(),
    });

    // pull back the positive target through its HVC representative: -(beta1, Z1, J1)
    let (fact_a, hvc_a) = find_fact::<HvcPullbackData>(
        reg,
        &inst.id,
        "hvc-pullback",
        |d| d.target == inst.target_a,
        &format!("target '{}'", inst.target_a),
    )?;
    let beta1 = build_beta(inst, &hvc_a);
    ledger.push(beta1.clone(), -1);
    log.push(CompletionStep {
        action: "subtract pullback precycle".into(),
        precycle: Some(beta1.id.clone()),
        realizes: Some("(6)".into()),
        facts: vec![fact_a],
        note: format!("div({}) = {} - HVC on {}", hvc_a.section, hvc_a.target, hvc_a.variety),
        divisor_after: ledger.divisor(),
    });

    if let Some(target_b) = &inst.target_b {
        let (fact_b, hvc_b) = find_fact::<HvcPullbackData>(
            reg,
            &inst.id,
            "hvc-pullback",
            |d| d.target == *target_b,
            &format!("target '{target_b}'"),
        )?;
        let beta2 = build_beta(inst, &hvc_b);
        ledger.push(beta2.clone(), 1);
        log.push(CompletionStep {
            action: "add pullback precycle".into(),
            precycle: Some(beta2.id.clone()),
            realizes: Some("(7)".into()),
            facts: vec![fact_b],
            note: format!("div({}) = {} - HVC on {}", hvc_b.section, hvc_b.target, hvc_b.variety),
            divisor_after: ledger.divisor(),
        });
    }

    log.push(CompletionStep {
        action: "divisor trace".into(),
        precycle: None,
        realizes: Some("(8)-(9)".into()),
        facts: vec![],
        note: "remaining divisor is paired HVC".into(),
        divisor_after: ledger.divisor(),
    });

    // cancel paired HVC components via Bertini curves: -(gamma_i^{n_i}, C_i x E4, R_i).
    // Routing is fact-driven: a positive component with a registered Bertini
    // curve is handled here, the rest fall through to the projection phase.
    let snapshot: Vec<(String, i64)> = ledger.divisor().into_iter().collect();
    for (cycle, mult) in &snapshot {
        if *mult <= 0 {
            continue;
        }
        if !cycles.contains_key(cycle) {
            return Err(TregError::UnknownCycle(cycle.clone()));
        }
        let found = find_fact::<BertiniData>(
            reg,
            &inst.id,
            "bertini-curve",
            |d| d.plus == *cycle,
            "",
        );
        let (fact_name, data) = match found {
            Ok(hit) => hit,
            Err(_) => continue,
        };
        if !cycles.contains_key(&data.curve) {
            return Err(TregError::UnknownCycle(data.curve.clone()));
        }
        let corr = Precycle {
            id: data.section.clone(),
            section: opaque_section(&inst.id, &data.section, &inst.ambient, *mult),
            variety: data.curve.clone(),
            bundle: [(data.bundle.clone(), *mult)].into_iter().collect(),
            divisor: vec![
                DivisorEntry {
                    cycle: data.plus.clone(),
                    mult: *mult,
                },
                DivisorEntry {
                    cycle: data.minus.clone(),
                    mult: -*mult,
                },
            ],
        };
        ledger.push(corr, -1);
        log.push(CompletionStep {
            action: "point-pair correction".into(),
            precycle: Some(data.section.clone()),
            realizes: Some("(10)-(11)".into()),
            facts: vec![fact_name, FACT_CURVE_EQUIVALENCE.into()],
            note: format!(
                "div({}^{}) = {} ({} - {}) on {}",
                data.section, mult, mult, data.plus, data.minus, data.curve
            ),
            divisor_after: ledger.divisor(),
        });
    }

    log.push(CompletionStep {
        action: "divisor trace".into(),
        precycle: None,
        realizes: Some("(12)".into()),
        facts: vec![],
        note: "point fibers cancelled; projection points remain".into(),
        divisor_after: ledger.divisor(),
    });

    // two-step cancellation of projection-point components
    let snapshot: Vec<(String, i64)> = ledger.divisor().into_iter().collect();
    let mut emitted_14 = false;
    for (cycle, mult) in &snapshot {
        if *mult <= 0 {
            continue;
        }
        let (fact_name, data) = find_fact::<ProjectionPairData>(
            reg,
            &inst.id,
            "projection-pair",
            |d| d.plus == *cycle,
            &format!("no bertini-curve or projection-pair covering '{cycle}'"),
        )?;
        if data.via != data.plus {
            let corr = Precycle {
                id: data.nu_section.clone(),
                section: opaque_section(&inst.id, &data.nu_section, &inst.ambient, *mult),
                variety: data.nu_variety.clone(),
                bundle: [(data.nu_bundle.clone(), *mult)].into_iter().collect(),
                divisor: vec![
                    DivisorEntry {
                        cycle: data.plus.clone(),
                        mult: *mult,
                    },
                    DivisorEntry {
                        cycle: data.via.clone(),
                        mult: -*mult,
                    },
                ],
            };
            ledger.push(corr, -1);
            log.push(CompletionStep {
                action: "fourth-factor point move".into(),
                precycle: Some(data.nu_section.clone()),
                realizes: Some("(13)".into()),
                facts: vec![fact_name.clone(), FACT_CURVE_EQUIVALENCE.into()],
                note: format!(
                    "div({}^{}) = {} ({} - {}) on {}",
                    data.nu_section, mult, mult, data.plus, data.via, data.nu_variety
                ),
                divisor_after: ledger.divisor(),
            });
        }
        if data.via != data.minus {
            if !emitted_14 {
                log.push(CompletionStep {
                    action: "divisor trace".into(),
                    precycle: None,
                    realizes: Some("(14)".into()),
                    facts: vec![],
                    note: "projection bases still differ at fixed fourth-factor points".into(),
                    divisor_after: ledger.divisor(),
                });
                emitted_14 = true;
            }
            let g_variety = data.g_variety.clone().ok_or_else(|| {
                TregError::MissingRegistryFact(format!(
                    "projection-pair for '{cycle}' lacks a base-move variety"
                ))
            })?;
            let g_section = data.g_section.clone().unwrap_or_else(|| "g".into());
            let corr = Precycle {
                id: g_section.clone(),
                section: opaque_section(&inst.id, &g_section, &inst.ambient, *mult),
                variety: g_variety.clone(),
                bundle: BundleTag::new(),
                divisor: vec![
                    DivisorEntry {
                        cycle: data.via.clone(),
                        mult: *mult,
                    },
                    DivisorEntry {
                        cycle: data.minus.clone(),
                        mult: -*mult,
                    },
                ],
            };
            ledger.push(corr, -1);
            log.push(CompletionStep {
                action: "projection base move".into(),
                precycle: Some(g_section),
                realizes: Some("(15)-(16)".into()),
                facts: vec![fact_name, FACT_HYPERPLANE_RATIONAL.into()],
                note: format!("rational function on {} moves {} to {}", g_variety, data.via, data.minus),
                divisor_after: ledger.divisor(),
            });
        }
    }

    let remaining = ledger.divisor();
    if let Some((cycle, _)) = remaining.iter().next() {
        return Err(TregError::MultiplicityMismatch(cycle.clone()));
    }

    for term in &ledger.terms {
        term.precycle.validate(&cycles)?;
    }

    let mut outcome = CompletionOutcome {
        ledger,
        cycles,
        log,
        surviving: vec![],
    };
    outcome.audit_surviving(&FormDescriptor::eta_2_2());
    Ok(outcome)
}

fn build_beta(inst: &HyperplaneInstance, data: &HvcPullbackData) -> Precycle {
    let mut divisor = vec![DivisorEntry {
        cycle: data.target.clone(),
        mult: 1,
    }];
    for e in data.point_fibers.iter().chain(data.projection_points.iter()) {
        divisor.push(DivisorEntry {
            cycle: e.cycle.clone(),
            mult: -e.mult,
        });
    }
    Precycle {
        id: data.section.clone(),
        section: opaque_section(&inst.id, &data.section, &inst.ambient, 1),
        variety: data.variety.clone(),
        bundle: [(data.bundle.clone(), 1)].into_iter().collect(),
        divisor,
    }
}
