//! Tame-symbol suite over the shipped corpora: goldens, Steinberg
//! vanishings, boundary-squared, reciprocity, and the randomized properties.

use proptest::prelude::*;
use treg::corpus::{self, run_reciprocity_case, run_symbol_case};
use treg::grat::GRat;
use treg::symbolic::factored::FactoredFunction;
use treg::symbolic::registry::Registry;
use treg::symbolic::symbol::{
    boundary_squared, full_boundary, higher_tame, tame_symbol, weil_reciprocity, MilnorSymbol,
    TorsionMode,
};

fn ff(name: &str, ambient: &str) -> FactoredFunction {
    FactoredFunction::factor(name, ambient)
}

#[test]
fn corpus_symbol_cases_all_pass() {
    for corpus_file in [corpus::p1xp1_corpus(), corpus::elliptic_corpus()] {
        corpus_file.validate().unwrap();
        for case in &corpus_file.symbol_cases {
            let outcome = run_symbol_case(&corpus_file.registry, case).unwrap();
            assert!(
                outcome.passed,
                "case '{}' failed: {}",
                outcome.id, outcome.payload
            );
        }
    }
}

#[test]
fn corpus_reciprocity_cases_all_pass() {
    for corpus_file in [corpus::p1xp1_corpus(), corpus::elliptic_corpus()] {
        for case in &corpus_file.reciprocity_cases {
            let outcome = run_reciprocity_case(&corpus_file.registry, case).unwrap();
            assert!(
                outcome.passed,
                "case '{}' failed: {}",
                outcome.id, outcome.payload
            );
        }
    }
}

#[test]
fn valuation_examples() {
    let reg = corpus::p1xp1_corpus().registry;
    // t^2 s^3 against t = 0
    let f = FactoredFunction::monomial("P1xP1", GRat::one(), &[("t", 2), ("s", 3)]);
    assert_eq!(reg.valuation(&f, "P1xP1@t=0").unwrap(), 2);
    // constants vanish nowhere
    let c = FactoredFunction::constant_fn(GRat::gaussian(4, -1), "P1xP1");
    assert_eq!(reg.valuation(&c, "P1xP1@s=inf").unwrap(), 0);
    // t/s against s = inf: the pole of s counts with sign
    let q = FactoredFunction::monomial("P1xP1", GRat::one(), &[("t", 1), ("s", -1)]);
    assert_eq!(reg.valuation(&q, "P1xP1@s=inf").unwrap(), 1);
    // unregistered component
    assert!(reg.valuation(&f, "nope").is_err());
}

#[test]
fn valuation_is_multiplicative() {
    let reg = corpus::p1xp1_corpus().registry;
    let f = FactoredFunction::monomial("P1xP1", GRat::from_int(3), &[("t", 2), ("s", -1)]);
    let g = FactoredFunction::monomial("P1xP1", GRat::gaussian(0, 1), &[("t", -2), ("t-1", 4)]);
    for comp in ["P1xP1@t=0", "P1xP1@t=1", "P1xP1@t=inf", "P1xP1@s=0", "P1xP1@s=inf"] {
        assert_eq!(
            reg.valuation(&f.mul(&g), comp).unwrap(),
            reg.valuation(&f, comp).unwrap() + reg.valuation(&g, comp).unwrap()
        );
    }
}

#[test]
fn n3_expansion_structure_at_t0() {
    // {t, s, ts} at t=0 has valuations (1, 0, 1): two subsymbols survive,
    // {s0, (ts)0} with exponent +1 and {t0, s0} with exponent +1, whose
    // restrictions are (s, s) and (1, s).
    let reg = corpus::p1xp1_corpus().registry;
    let sym = MilnorSymbol::new(
        vec![
            ff("t", "P1xP1"),
            ff("s", "P1xP1"),
            FactoredFunction::monomial("P1xP1", GRat::one(), &[("t", 1), ("s", 1)]),
        ],
        "P1xP1",
    );
    let terms = higher_tame(&reg, &sym, "P1xP1@t=0").unwrap();
    assert_eq!(terms.len(), 2);
    let s_fiber = ff("sline.s", "sline");
    // j = 1 term: {restrict(s), restrict(ts)} = {s, s}, exponent +1
    assert_eq!(terms[0].1, 1);
    assert_eq!(terms[0].0.entries, vec![s_fiber.clone(), s_fiber.clone()]);
    // j = 3 term: {restrict(t), restrict(s)} = {1, s}, exponent +1
    assert_eq!(terms[1].1, 1);
    assert!(terms[1].0.entries[0].is_identity());
    assert_eq!(terms[1].0.entries[1], s_fiber);
}

#[test]
fn tame_antisymmetry_on_random_monomials() {
    let reg = corpus::p1xp1_corpus().registry;
    let mut seed = 0x2545f4914f6cdd1du64;
    let mut next = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        ((seed % 7) as i64) - 3
    };
    for _ in 0..50 {
        let f = FactoredFunction::monomial(
            "P1xP1",
            GRat::one(),
            &[("t", next()), ("s", next()), ("t-1", next())],
        );
        let g = FactoredFunction::monomial("P1xP1", GRat::one(), &[("t", next()), ("s", next())]);
        if f.exponents.is_empty() || g.exponents.is_empty() {
            continue;
        }
        let fg = tame_symbol(&reg, &MilnorSymbol::new(vec![f.clone(), g.clone()], "P1xP1")).unwrap();
        let gf = tame_symbol(&reg, &MilnorSymbol::new(vec![g, f], "P1xP1")).unwrap();
        // component-wise inverse: negate the formal coefficients
        let mut neg = gf.clone();
        for t in &mut neg.terms {
            t.coefficient = -t.coefficient;
        }
        // {f,g} and {g,f}^{-1} agree up to 2-torsion
        assert!(fg.equivalent(&neg, TorsionMode::ModTwo));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// div o T = 0 on random monomial pairs over P1 x P1.
    #[test]
    fn boundary_squared_vanishes_p1xp1(
        et in -3i64..=3, es in -3i64..=3, e1 in -2i64..=2,
        gt in -3i64..=3, gs in -3i64..=3, g1 in -2i64..=2,
    ) {
        let reg = p1xp1_registry();
        let f = FactoredFunction::monomial("P1xP1", GRat::one(), &[("t", et), ("s", es), ("t-1", e1)]);
        let g = FactoredFunction::monomial("P1xP1", GRat::one(), &[("t", gt), ("s", gs), ("t-1", g1)]);
        prop_assume!(!f.exponents.is_empty() && !g.exponents.is_empty());
        let sym = MilnorSymbol::new(vec![f, g], "P1xP1");
        let sq = boundary_squared(&reg, &sym).unwrap();
        prop_assert!(sq.is_zero(TorsionMode::ModTwo));
    }

    /// div o T = 0 on random monomial pairs over E1 x E2.
    #[test]
    fn boundary_squared_vanishes_e1e2(
        a in -2i64..=2, b in -2i64..=2, c in -2i64..=2,
        d in -2i64..=2, e in -2i64..=2, f in -2i64..=2,
    ) {
        let reg = elliptic_registry();
        let f1 = FactoredFunction::monomial(
            "E1xE2", GRat::one(),
            &[("E1xE2.x1", a), ("E1xE2.x1-2", b), ("E1xE2.x2", c)],
        );
        let f2 = FactoredFunction::monomial(
            "E1xE2", GRat::one(),
            &[("E1xE2.x1+1", d), ("E1xE2.x2-2", e), ("E1xE2.x2+1", f)],
        );
        prop_assume!(!f1.exponents.is_empty() && !f2.exponents.is_empty());
        let sym = MilnorSymbol::new(vec![f1, f2], "E1xE2");
        let sq = boundary_squared(&reg, &sym).unwrap();
        prop_assert!(sq.is_zero(TorsionMode::ModTwo));
    }

    /// Full N=3 boundary-squared on monomial triples over P1 x P1.
    #[test]
    fn boundary_squared_vanishes_n3(
        e1 in -2i64..=2, e2 in -2i64..=2, e3 in -2i64..=2,
        e4 in -2i64..=2, e5 in -2i64..=2, e6 in -2i64..=2,
    ) {
        let reg = p1xp1_registry();
        let f1 = FactoredFunction::monomial("P1xP1", GRat::one(), &[("t", e1), ("s", e2)]);
        let f2 = FactoredFunction::monomial("P1xP1", GRat::one(), &[("t", e3), ("s", e4)]);
        let f3 = FactoredFunction::monomial("P1xP1", GRat::one(), &[("t", e5), ("s", e6)]);
        prop_assume!(!f1.exponents.is_empty() && !f2.exponents.is_empty() && !f3.exponents.is_empty());
        let sym = MilnorSymbol::new(vec![f1, f2, f3], "P1xP1");
        let sq = boundary_squared(&reg, &sym).unwrap();
        prop_assert!(sq.is_zero(TorsionMode::ModTwo));
    }

    /// Weil reciprocity is exactly 1 on random monomial pairs over P1.
    #[test]
    fn weil_reciprocity_random_p1(
        a in -3i64..=3, b in -3i64..=3, c in -3i64..=3,
        d in -3i64..=3, e in -3i64..=3, f in -3i64..=3,
    ) {
        let reg = p1xp1_registry();
        let f1 = FactoredFunction::monomial("P1", GRat::gaussian(2, 1), &[("z", a), ("z-1", b), ("z-2", c)]);
        let f2 = FactoredFunction::monomial("P1", GRat::from_int(-3), &[("z+1", d), ("z-3", e), ("z", f)]);
        prop_assume!(!f1.exponents.is_empty() && !f2.exponents.is_empty());
        let prod = weil_reciprocity(&reg, &f1, &f2).unwrap();
        prop_assert!(prod.is_one(), "product {prod}");
    }
}

fn p1xp1_registry() -> Registry {
    corpus::p1xp1_corpus().registry
}

fn elliptic_registry() -> Registry {
    corpus::elliptic_corpus().registry
}

#[test]
fn constant_entry_everywhere_zero_valuation_gives_zero_boundary() {
    let reg = p1xp1_registry();
    let sym = MilnorSymbol::new(
        vec![
            FactoredFunction::constant_fn(GRat::gaussian(1, 2), "P1xP1"),
            FactoredFunction::constant_fn(GRat::from_int(5), "P1xP1"),
        ],
        "P1xP1",
    );
    let b = full_boundary(&reg, &sym).unwrap();
    assert!(b.terms.is_empty());
}

#[test]
fn steinberg_pattern_required() {
    let reg = p1xp1_registry();
    let sym = MilnorSymbol::new(vec![ff("t", "P1xP1"), ff("s", "P1xP1")], "P1xP1");
    assert!(matches!(
        treg::symbolic::symbol::steinberg_image_check(&reg, &sym),
        Err(treg::error::TregError::PatternNotFound)
    ));
}

#[test]
fn unresolvable_restriction_reported() {
    // a factor with a divisor entry but no restriction table entry
    let mut reg = p1xp1_registry();
    reg.add_factor("mystery", "P1xP1", &[("P1xP1@t=0", 1)], vec![], None);
    let sym = MilnorSymbol::new(vec![ff("mystery", "P1xP1"), ff("s", "P1xP1")], "P1xP1");
    assert!(matches!(
        tame_symbol(&reg, &sym),
        Err(treg::error::TregError::UnresolvableRestriction(_, _))
    ));
}

#[test]
fn tame_symbol_independent_of_local_equation_choice() {
    // Rebase every restriction entry at the curve origin against the local
    // equation 2 x/y instead of x/y: all order -2 unit parts pick up a
    // factor 4. Length-2 boundaries must be unchanged (the quotient has
    // valuation zero, so the unit powers cancel exactly).
    let reg1 = elliptic_registry();
    let mut reg2 = elliptic_registry();
    let scale = GRat::from_int(4);
    for factor in ["E.x", "E.x-2", "E.x+1"] {
        let info = reg2.factors.get_mut(factor).unwrap();
        let entry = info.restrictions.get_mut("E@O").unwrap();
        entry.constant = &entry.constant * &scale;
    }
    let cases = [
        (ff("E.x-2", "E"), ff("E.x+1", "E")),
        (ff("E.x", "E"), ff("E.x-2", "E")),
        (
            FactoredFunction::monomial("E", GRat::gaussian(1, 1), &[("E.x", 2), ("E.x+1", -1)]),
            FactoredFunction::monomial("E", GRat::from_int(3), &[("E.x-2", 1), ("E.x", -1)]),
        ),
    ];
    for (f, g) in cases {
        let sym = MilnorSymbol::new(vec![f.clone(), g.clone()], "E");
        let b1 = tame_symbol(&reg1, &sym).unwrap();
        let b2 = tame_symbol(&reg2, &sym).unwrap();
        assert!(b1.equivalent(&b2, TorsionMode::Strict));
        let w1 = weil_reciprocity(&reg1, &f, &g).unwrap();
        let w2 = weil_reciprocity(&reg2, &f, &g).unwrap();
        assert_eq!(w1, w2);
        assert!(w1.is_one());
    }
}

#[test]
fn eval_factored_examples() {
    use num_complex::Complex64 as C64;
    let mut reg = elliptic_registry();
    // constants evaluate to themselves
    let c = FactoredFunction::constant_fn(GRat::gaussian(2, -5), "E1xE2");
    let v = reg
        .eval_factored(&c, &[C64::new(1.0, 0.0); 4])
        .unwrap();
    assert_eq!(v, C64::new(2.0, -5.0));
    // (x - 1)^2 at x = 3 on the line
    reg.add_factor(
        "x-1",
        "E",
        &[],
        vec![],
        Some(treg::symbolic::factored::PolyEval::linear(0, GRat::one())),
    );
    let f = FactoredFunction::monomial("E", GRat::one(), &[("x-1", 2)]);
    let v = reg.eval_factored(&f, &[C64::new(3.0, 0.0), C64::new(0.0, 0.0)]).unwrap();
    assert_eq!(v, C64::new(4.0, 0.0));
    // x1^2 x2 + i as a registered polynomial factor, at ((1, sqrt 2), (2, 3))
    reg.add_factor(
        "f1-poly",
        "E1xE2",
        &[],
        vec![],
        Some(treg::symbolic::factored::PolyEval {
            terms: vec![
                treg::symbolic::factored::PolyTerm {
                    coeff: GRat::one(),
                    monomial: vec![(0, 2), (2, 1)],
                },
                treg::symbolic::factored::PolyTerm {
                    coeff: GRat::i(),
                    monomial: vec![],
                },
            ],
        }),
    );
    let f1 = FactoredFunction::factor("f1-poly", "E1xE2");
    let p = [
        C64::new(1.0, 0.0),
        C64::new(2f64.sqrt(), 0.0),
        C64::new(2.0, 0.0),
        C64::new(3.0, 0.0),
    ];
    let v = reg.eval_factored(&f1, &p).unwrap();
    assert!((v - C64::new(2.0, 1.0)).norm() < 1e-15);
    // pole: vanishing factor with negative exponent balance
    let bad = FactoredFunction::monomial("E", GRat::one(), &[("x-1", -1)]);
    assert!(matches!(
        reg.eval_factored(&bad, &[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]),
        Err(treg::error::TregError::IndeterminateValue)
    ));
}

#[test]
fn eval_factored_is_multiplicative() {
    use num_complex::Complex64 as C64;
    let reg = elliptic_registry();
    let f = FactoredFunction::monomial("E", GRat::gaussian(1, 2), &[("E.x", 2), ("E.x-2", -1)]);
    let g = FactoredFunction::monomial("E", GRat::from_int(-3), &[("E.x+1", 1), ("E.x", -1)]);
    let p = [C64::new(0.7, 0.4), C64::new(1.1, -0.3)];
    let lhs = reg.eval_factored(&f.mul(&g), &p).unwrap();
    let rhs = reg.eval_factored(&f, &p).unwrap() * reg.eval_factored(&g, &p).unwrap();
    assert!((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
}

#[test]
fn tame_symbol_transforms_bundle_tags_into_tensor_powers() {
    let reg = p1xp1_registry();
    let f = ff("z-2", "P1").with_bundle(&[("L1", 1)]);
    let g = ff("z-3", "P1").with_bundle(&[("L2", 1)]);
    let sym = MilnorSymbol::new(vec![f, g], "P1");
    let b = tame_symbol(&reg, &sym).unwrap();
    for term in &b.terms {
        let entry = &term.symbol.entries[0];
        let vf = reg.valuation(&ff("z-2", "P1"), &term.component).unwrap();
        let vg = reg.valuation(&ff("z-3", "P1"), &term.component).unwrap();
        let mut expect = std::collections::BTreeMap::new();
        if vg != 0 {
            expect.insert("L1".to_string(), vg);
        }
        if vf != 0 {
            expect.insert("L2".to_string(), -vf);
        }
        assert_eq!(entry.bundle, expect, "component {}", term.component);
    }
    // and sections of nontrivial bundles are rejected by reciprocity
    let f = ff("z-2", "P1").with_bundle(&[("L1", 1)]);
    let g = ff("z-3", "P1");
    assert!(matches!(
        weil_reciprocity(&reg, &f, &g),
        Err(treg::error::TregError::NontrivialBundle)
    ));
}
