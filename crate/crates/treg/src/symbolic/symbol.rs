//! Tame symbols on Milnor symbols of factored functions.
//!
//! Three layers:
//!   * `tame_symbol` — the length-2 boundary with the `(-1)^{v(f)v(g)}`
//!     sign and the quotient value `(f^{v(g)}/g^{v(f)})|_D`, bundle tags
//!     transforming into the matching tensor powers;
//!   * `higher_tame` / `full_boundary` — the length-N boundary as a formal
//!     product of omit-one subsymbols with exponents `(-1)^{N-j} v_D(s_j)`,
//!     valid modulo 2-torsion;
//!   * `boundary_squared` — the composite of two boundary layers, aggregated
//!     over canonical nested components; the contract is the empty sum.

use super::factored::FactoredFunction;
use super::registry::Registry;
use crate::error::{Result, TregError};
use crate::grat::GRat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Whether symbol equality ignores 2-torsion (signs of entry constants).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionMode {
    Strict,
    ModTwo,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MilnorSymbol {
    pub entries: Vec<FactoredFunction>,
    pub base: String,
}

impl MilnorSymbol {
    pub fn new(entries: Vec<FactoredFunction>, base: &str) -> Self {
        debug_assert!(entries.iter().all(|e| e.ambient == base));
        MilnorSymbol {
            entries,
            base: base.to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// A symbol containing the group identity as an entry is trivial.
    pub fn has_identity_entry(&self, mode: TorsionMode) -> bool {
        self.entries.iter().any(|e| match mode {
            TorsionMode::Strict => e.is_identity(),
            TorsionMode::ModTwo => e.is_identity_mod_two(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundaryTerm {
    pub symbol: MilnorSymbol,
    pub component: String,
    pub coefficient: i64,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SymbolBoundary {
    pub terms: Vec<BoundaryTerm>,
}

impl SymbolBoundary {
    pub fn push(&mut self, symbol: MilnorSymbol, component: &str, coefficient: i64) {
        if coefficient != 0 {
            self.terms.push(BoundaryTerm {
                symbol,
                component: component.to_string(),
                coefficient,
            });
        }
    }

    /// Canonicalize and sum coefficients; drops identity-containing symbols
    /// and zero totals. The result is the normal form used for equality.
    pub fn aggregate(&self, mode: TorsionMode) -> Vec<BoundaryTerm> {
        let mut acc: BTreeMap<(String, String), (MilnorSymbol, i64)> = BTreeMap::new();
        for term in &self.terms {
            if let Some((canon, sign)) = canonical_symbol(&term.symbol, mode) {
                let key = (term.component.clone(), symbol_key(&canon));
                let entry = acc.entry(key).or_insert_with(|| (canon.clone(), 0));
                entry.1 += sign * term.coefficient;
            }
        }
        acc.into_iter()
            .filter(|(_, (_, c))| *c != 0)
            .map(|((component, _), (symbol, coefficient))| BoundaryTerm {
                symbol,
                component,
                coefficient,
            })
            .collect()
    }

    pub fn is_zero(&self, mode: TorsionMode) -> bool {
        self.aggregate(mode).is_empty()
    }

    pub fn equivalent(&self, other: &SymbolBoundary, mode: TorsionMode) -> bool {
        let a = self.aggregate(mode);
        let b = other.aggregate(mode);
        if a.len() != b.len() {
            return false;
        }
        a.iter().zip(b.iter()).all(|(x, y)| {
            x.component == y.component
                && x.coefficient == y.coefficient
                && symbol_key(&x.symbol) == symbol_key(&y.symbol)
        })
    }
}

fn entry_key(f: &FactoredFunction) -> String {
    format!(
        "{:?}|{:?}|{:?}",
        f.constant, f.exponents, f.bundle
    )
}

fn symbol_key(s: &MilnorSymbol) -> String {
    let parts: Vec<String> = s.entries.iter().map(entry_key).collect();
    format!("{}::{}", s.base, parts.join("&"))
}

/// Canonical representative of a symbol under entry sorting (graded
/// anticommutativity: odd permutations invert the symbol) and, mod 2-torsion,
/// sign normalization of entry constants. Length-1 symbols with constant 1
/// additionally have their exponent content extracted into the coefficient.
/// Returns None when the symbol is trivially the identity.
fn canonical_symbol(sym: &MilnorSymbol, mode: TorsionMode) -> Option<(MilnorSymbol, i64)> {
    if sym.has_identity_entry(mode) {
        return None;
    }
    let mut entries: Vec<FactoredFunction> = sym
        .entries
        .iter()
        .map(|e| {
            if mode == TorsionMode::ModTwo {
                let mut e2 = e.clone();
                e2.constant = e2.constant.canonical_up_to_sign();
                e2
            } else {
                e.clone()
            }
        })
        .collect();

    // sort by key, tracking permutation parity
    let mut sign = 1i64;
    let n = entries.len();
    for i in 0..n {
        for j in (i + 1..n).rev() {
            if entry_key(&entries[j - 1]) > entry_key(&entries[j]) {
                entries.swap(j - 1, j);
                sign = -sign;
            }
        }
    }

    // content extraction for K1 elements: l(h^k) = k l(h)
    let mut coeff = sign;
    if entries.len() == 1 {
        let e = &entries[0];
        let const_is_unit = match mode {
            TorsionMode::Strict => e.constant.is_one(),
            TorsionMode::ModTwo => e.constant.is_one() || e.constant.is_minus_one(),
        };
        if const_is_unit && !e.exponents.is_empty() {
            let mut g: i64 = 0;
            for v in e.exponents.values() {
                g = gcd(g, *v);
            }
            let first_sign = e.exponents.values().next().map(|v| v.signum()).unwrap_or(1);
            let content = g * first_sign;
            if content != 1 && content != 0 && e.bundle_divisible_by(content) {
                let mut reduced = e.clone();
                reduced.constant = GRat::one();
                for v in reduced.exponents.values_mut() {
                    *v /= content;
                }
                for v in reduced.bundle.values_mut() {
                    *v /= content;
                }
                entries[0] = reduced;
                coeff *= content;
            }
        }
    }
    Some((
        MilnorSymbol {
            entries,
            base: sym.base.clone(),
        },
        coeff,
    ))
}

impl FactoredFunction {
    fn bundle_divisible_by(&self, k: i64) -> bool {
        self.bundle.values().all(|v| v % k == 0)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// The length-2 tame symbol with sign and tensor-power bundle bookkeeping:
/// over each codim-1 component D,
///   (-1)^{v_D(f) v_D(g)} (f^{v_D(g)} / g^{v_D(f)})|_D.
pub fn tame_symbol(reg: &Registry, sym: &MilnorSymbol) -> Result<SymbolBoundary> {
    assert_eq!(sym.len(), 2, "tame_symbol expects a length-2 symbol");
    let f = &sym.entries[0];
    let g = &sym.entries[1];
    let mut out = SymbolBoundary::default();
    for comp in reg.components_of(&sym.base) {
        let vf = reg.valuation(f, comp)?;
        let vg = reg.valuation(g, comp)?;
        if vf == 0 && vg == 0 {
            continue;
        }
        let quotient = f.pow_i(vg).mul(&g.pow_i(-vf));
        let mut value = reg.restrict_unit(&quotient, comp)?;
        if (vf * vg) % 2 != 0 {
            value = value.scaled(&(-GRat::one()));
        }
        let variety = &reg.component(comp)?.variety;
        out.push(MilnorSymbol::new(vec![value], variety), comp, 1);
    }
    Ok(out)
}

/// One component's contribution of the higher tame symbol: the formal
/// product of omit-one subsymbols with exponents `(-1)^{N-j} v_D(s_j)`.
pub fn higher_tame(
    reg: &Registry,
    sym: &MilnorSymbol,
    comp: &str,
) -> Result<Vec<(MilnorSymbol, i64)>> {
    let n = sym.len();
    assert!(n >= 2, "higher_tame expects length >= 2");
    let variety = reg.component(comp)?.variety.clone();
    let vals: Vec<i64> = sym
        .entries
        .iter()
        .map(|e| reg.valuation(e, comp))
        .collect::<Result<_>>()?;
    let mut out = vec![];
    for (j, v) in vals.iter().enumerate() {
        if *v == 0 {
            continue;
        }
        // 1-indexed slot j+1: exponent (-1)^{N-(j+1)} v
        let sign = if (n - 1 - j) % 2 == 0 { 1 } else { -1 };
        let mut entries = Vec::with_capacity(n - 1);
        for (k, e) in sym.entries.iter().enumerate() {
            if k != j {
                entries.push(reg.restrict_unit(e, comp)?);
            }
        }
        out.push((MilnorSymbol::new(entries, &variety), sign * v));
    }
    Ok(out)
}

/// The full boundary T^{(N)}: sum of `higher_tame` contributions over all
/// components of the base where some entry has nonzero valuation.
pub fn full_boundary(reg: &Registry, sym: &MilnorSymbol) -> Result<SymbolBoundary> {
    let mut out = SymbolBoundary::default();
    for comp in reg.components_of(&sym.base) {
        for (s, c) in higher_tame(reg, sym, comp)? {
            out.push(s, comp, c);
        }
    }
    Ok(out)
}

/// T^{(N-1)} of T^{(N)}, pushed down to canonical nested components.
/// For N = 2 the inner map is the divisor map. The contract is that the
/// aggregate is empty.
pub fn boundary_squared(reg: &Registry, sym: &MilnorSymbol) -> Result<SymbolBoundary> {
    assert!(sym.len() >= 2, "boundary_squared expects length >= 2");
    let outer = full_boundary(reg, sym)?;
    let mut out = SymbolBoundary::default();
    for term in &outer.terms {
        let inner_base = &term.symbol.base;
        if term.symbol.len() == 1 {
            // divisor map on the length-1 boundary
            let f = &term.symbol.entries[0];
            for inner in reg.components_of(inner_base) {
                let v = reg.valuation(f, inner)?;
                if v == 0 {
                    continue;
                }
                let canonical = reg.nested_id(&term.component, inner)?.to_string();
                let variety = reg.component(inner)?.variety.clone();
                out.push(
                    MilnorSymbol::new(vec![], &variety),
                    &canonical,
                    term.coefficient * v,
                );
            }
        } else {
            for inner in reg.components_of(inner_base) {
                for (s, c) in higher_tame(reg, &term.symbol, inner)? {
                    let canonical = reg.nested_id(&term.component, inner)?.to_string();
                    out.push(s, &canonical, term.coefficient * c);
                }
            }
        }
    }
    Ok(out)
}

/// Product over all points of the tame-symbol values of `{f, g}` on a curve:
/// exactly 1 for exact inputs (Weil reciprocity).
pub fn weil_reciprocity(
    reg: &Registry,
    f: &FactoredFunction,
    g: &FactoredFunction,
) -> Result<GRat> {
    if !f.bundle.is_empty() || !g.bundle.is_empty() {
        return Err(TregError::NontrivialBundle);
    }
    let sym = MilnorSymbol::new(vec![f.clone(), g.clone()], &f.ambient);
    let boundary = tame_symbol(reg, &sym)?;
    let mut product = GRat::one();
    for term in &boundary.terms {
        let entry = &term.symbol.entries[0];
        if !entry.exponents.is_empty() {
            return Err(TregError::CommonComponentUncancelled(term.component.clone()));
        }
        product = &product * &entry.constant.pow_i(term.coefficient);
    }
    Ok(product)
}

/// Outcome of the Steinberg-image recognizer.
#[derive(Debug, Clone)]
pub struct SteinbergReport {
    pub boundary: SymbolBoundary,
    /// Indices into `boundary.terms` not recognized as relation-ideal members.
    pub unrecognized: Vec<usize>,
}

impl SteinbergReport {
    pub fn all_trivial(&self) -> bool {
        self.unrecognized.is_empty()
    }
}

fn is_minus_pair(a: &FactoredFunction, b: &FactoredFunction) -> bool {
    a.exponents == b.exponents
        && a.bundle == b.bundle
        && (&a.constant + &b.constant).is_zero()
}

/// (s, s) and (s, -s) coincide mod 2-torsion; so do the registered
/// Steinberg pairs with either entry rescaled by -1.
fn eq_mod_sign(a: &FactoredFunction, b: &FactoredFunction) -> bool {
    a.exponents == b.exponents
        && a.bundle == b.bundle
        && a.constant.canonical_up_to_sign() == b.constant.canonical_up_to_sign()
}

fn is_steinberg_pair_mod_sign(reg: &Registry, a: &FactoredFunction, b: &FactoredFunction) -> bool {
    reg.steinberg_pairs.iter().any(|(f, g)| {
        (eq_mod_sign(f, a) && eq_mod_sign(g, b)) || (eq_mod_sign(f, b) && eq_mod_sign(g, a))
    })
}

/// Literal adjacency pattern required of the input symbol.
fn input_pattern_present(reg: &Registry, sym: &MilnorSymbol) -> bool {
    sym.entries
        .windows(2)
        .any(|w| is_minus_pair(&w[0], &w[1]) || reg.is_steinberg_pair(&w[0], &w[1]))
}

/// Triviality mod 2-torsion: symbols are anticommutative there, so any pair
/// of entries may witness the relation, not just adjacent ones.
fn term_trivial_mod_two(reg: &Registry, sym: &MilnorSymbol) -> bool {
    if sym.has_identity_entry(TorsionMode::ModTwo) {
        return true;
    }
    let n = sym.entries.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (&sym.entries[i], &sym.entries[j]);
            if eq_mod_sign(a, b) || is_steinberg_pair_mod_sign(reg, a, b) {
                return true;
            }
        }
    }
    false
}

/// Checks that the boundary of a symbol with an adjacent Steinberg pattern
/// ((f, 1-f) registered, or (s, -s)) lies in the relation ideal mod
/// 2-torsion: every aggregated output symbol must itself carry a
/// trivializing pattern.
pub fn steinberg_image_check(reg: &Registry, sym: &MilnorSymbol) -> Result<SteinbergReport> {
    if !input_pattern_present(reg, sym) {
        return Err(TregError::PatternNotFound);
    }
    let boundary = full_boundary(reg, sym)?;
    let aggregated = SymbolBoundary {
        terms: boundary.aggregate(TorsionMode::ModTwo),
    };
    let unrecognized = aggregated
        .terms
        .iter()
        .enumerate()
        .filter(|(_, t)| !term_trivial_mod_two(reg, &t.symbol))
        .map(|(i, _)| i)
        .collect();
    Ok(SteinbergReport {
        boundary: aggregated,
        unrecognized,
    })
}
