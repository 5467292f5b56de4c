//! Shipped corpora: builders, JSON schema, and case runners.

pub mod builders;
pub mod run;
pub mod schema;

pub use run::{run_reciprocity_case, run_symbol_case, CaseOutcome};
pub use schema::{CorpusFile, ExpectedTerm, ReciprocityCase, SymbolCase, SymbolCheck, SCHEMA_VERSION};

use crate::grat::GRat;
use crate::symbolic::factored::FactoredFunction;
use crate::symbolic::symbol::MilnorSymbol;

fn ff(name: &str, ambient: &str) -> FactoredFunction {
    FactoredFunction::factor(name, ambient)
}

/// The P1 x P1 corpus: coordinate tame-symbol golden, Steinberg suites,
/// boundary-squared cases, and P1 reciprocity.
pub fn p1xp1_corpus() -> CorpusFile {
    let registry = builders::p1_registry();
    let symbol_cases = vec![
        SymbolCase {
            id: "tame-ts-golden".into(),
            anchor: "One can explicitly compute".into(),
            symbol: MilnorSymbol::new(
                vec![ff("t", "P1xP1"), ff("s", "P1xP1")],
                "P1xP1",
            ),
            check: SymbolCheck::TameGolden {
                expected: vec![
                    ExpectedTerm {
                        component: "P1xP1@t=inf".into(),
                        base: "sline".into(),
                        entries: vec![ff("sline.s", "sline")],
                        coefficient: 1,
                    },
                    ExpectedTerm {
                        component: "P1xP1@t=0".into(),
                        base: "sline".into(),
                        entries: vec![ff("sline.s", "sline")],
                        coefficient: -1,
                    },
                    ExpectedTerm {
                        component: "P1xP1@s=0".into(),
                        base: "tline".into(),
                        entries: vec![ff("tline.t", "tline")],
                        coefficient: 1,
                    },
                    ExpectedTerm {
                        component: "P1xP1@s=inf".into(),
                        base: "tline".into(),
                        entries: vec![ff("tline.t", "tline")],
                        coefficient: -1,
                    },
                ],
            },
        },
        SymbolCase {
            id: "steinberg-z-1mz".into(),
            anchor: "l(a)l(1-a) = 0".into(),
            symbol: MilnorSymbol::new(
                vec![
                    ff("z", "P1"),
                    FactoredFunction::monomial("P1", -GRat::one(), &[("z-1", 1)]),
                ],
                "P1",
            ),
            check: SymbolCheck::TameTrivial,
        },
        SymbolCase {
            id: "tame-zz".into(),
            anchor: "generalization of the Tame symbol".into(),
            symbol: MilnorSymbol::new(vec![ff("z", "P1"), ff("z", "P1")], "P1"),
            check: SymbolCheck::TameGolden {
                expected: vec![
                    ExpectedTerm {
                        component: "P1@0".into(),
                        base: "pt".into(),
                        entries: vec![FactoredFunction::constant_fn(-GRat::one(), "pt")],
                        coefficient: 1,
                    },
                    ExpectedTerm {
                        component: "P1@inf".into(),
                        base: "pt".into(),
                        entries: vec![FactoredFunction::constant_fn(-GRat::one(), "pt")],
                        coefficient: 1,
                    },
                ],
            },
        },
        SymbolCase {
            id: "higher-matches-tame-ts".into(),
            anchor: "T^{(1)} and T both agree".into(),
            symbol: MilnorSymbol::new(vec![ff("t", "P1xP1"), ff("s", "P1xP1")], "P1xP1"),
            check: SymbolCheck::HigherMatchesTame,
        },
        SymbolCase {
            id: "boundary-sq-ts".into(),
            anchor: "T^{(N)} o T^{(N+1)} = 0".into(),
            symbol: MilnorSymbol::new(vec![ff("t", "P1xP1"), ff("s", "P1xP1")], "P1xP1"),
            check: SymbolCheck::BoundarySquaredZero,
        },
        SymbolCase {
            id: "boundary-sq-zz".into(),
            anchor: "T^{(N)} o T^{(N+1)} = 0".into(),
            symbol: MilnorSymbol::new(vec![ff("z", "P1"), ff("z", "P1")], "P1"),
            check: SymbolCheck::BoundarySquaredZero,
        },
        SymbolCase {
            id: "boundary-sq-n3-monomial".into(),
            anchor: "T^{(N)} o T^{(N+1)} = 0".into(),
            symbol: MilnorSymbol::new(
                vec![
                    ff("t", "P1xP1"),
                    ff("s", "P1xP1"),
                    FactoredFunction::monomial("P1xP1", GRat::one(), &[("t", 1), ("s", 1)]),
                ],
                "P1xP1",
            ),
            check: SymbolCheck::BoundarySquaredZero,
        },
        SymbolCase {
            id: "steinberg-n3".into(),
            anchor: "T_D{f,1-f,...} = 0".into(),
            symbol: MilnorSymbol::new(
                vec![
                    ff("t", "P1xP1"),
                    FactoredFunction::monomial("P1xP1", -GRat::one(), &[("t-1", 1)]),
                    ff("s", "P1xP1"),
                ],
                "P1xP1",
            ),
            check: SymbolCheck::SteinbergTrivial,
        },
        SymbolCase {
            id: "steinberg-minus-pair".into(),
            anchor: "{sigma, -sigma}".into(),
            symbol: MilnorSymbol::new(
                vec![
                    ff("z-1", "P1"),
                    FactoredFunction::monomial("P1", -GRat::one(), &[("z-1", 1)]),
                ],
                "P1",
            ),
            check: SymbolCheck::SteinbergTrivial,
        },
        SymbolCase {
            id: "constants-zero-boundary".into(),
            anchor: "plumbing".into(),
            symbol: MilnorSymbol::new(
                vec![
                    FactoredFunction::constant_fn(GRat::gaussian(2, 1), "P1xP1"),
                    FactoredFunction::constant_fn(GRat::from_int(-3), "P1xP1"),
                ],
                "P1xP1",
            ),
            check: SymbolCheck::ZeroBoundary,
        },
    ];
    let reciprocity_cases = vec![
        ReciprocityCase::Explicit {
            id: "p1-linear-pair".into(),
            f: ff("z-2", "P1"),
            g: ff("z-3", "P1"),
        },
        ReciprocityCase::RandomMonomials {
            id: "p1-random-monomials".into(),
            ambient: "P1".into(),
            factors: vec![
                "z".into(),
                "z-1".into(),
                "z-2".into(),
                "z+1".into(),
                "z-3".into(),
            ],
            pairs: 100,
            seed: 7,
            max_exp: 3,
        },
    ];
    CorpusFile {
        schema_version: SCHEMA_VERSION,
        registry,
        symbol_cases,
        reciprocity_cases,
        product_completions: vec![],
        hyperplane_completions: vec![],
    }
}

/// The elliptic corpus: boundary-squared on E1 x E2 and reciprocity on E.
pub fn elliptic_corpus() -> CorpusFile {
    let registry = builders::elliptic_registry();
    let symbol_cases = vec![
        SymbolCase {
            id: "boundary-sq-e1e2-a".into(),
            anchor: "T^{(N)} o T^{(N+1)} = 0".into(),
            symbol: MilnorSymbol::new(
                vec![ff("E1xE2.x1-2", "E1xE2"), ff("E1xE2.x2", "E1xE2")],
                "E1xE2",
            ),
            check: SymbolCheck::BoundarySquaredZero,
        },
        SymbolCase {
            id: "boundary-sq-e1e2-b".into(),
            anchor: "T^{(N)} o T^{(N+1)} = 0".into(),
            symbol: MilnorSymbol::new(
                vec![
                    FactoredFunction::monomial(
                        "E1xE2",
                        GRat::gaussian(0, 1),
                        &[("E1xE2.x1", 1), ("E1xE2.x2-2", -1)],
                    ),
                    FactoredFunction::monomial(
                        "E1xE2",
                        GRat::from_int(2),
                        &[("E1xE2.x1+1", 1), ("E1xE2.x2", 2)],
                    ),
                ],
                "E1xE2",
            ),
            check: SymbolCheck::BoundarySquaredZero,
        },
        SymbolCase {
            id: "higher-matches-tame-e1e2".into(),
            anchor: "T^{(1)} and T both agree".into(),
            symbol: MilnorSymbol::new(
                vec![ff("E1xE2.x1-2", "E1xE2"), ff("E1xE2.x2+1", "E1xE2")],
                "E1xE2",
            ),
            check: SymbolCheck::HigherMatchesTame,
        },
    ];
    let reciprocity_cases = vec![
        ReciprocityCase::Explicit {
            id: "e-x2-x1-pair".into(),
            f: ff("E.x-2", "E"),
            g: ff("E.x+1", "E"),
        },
        ReciprocityCase::RandomMonomials {
            id: "e-random-monomials".into(),
            ambient: "E".into(),
            factors: vec!["E.x".into(), "E.x-2".into(), "E.x+1".into()],
            pairs: 100,
            seed: 11,
            max_exp: 2,
        },
    ];
    CorpusFile {
        schema_version: SCHEMA_VERSION,
        registry,
        symbol_cases,
        reciprocity_cases,
        product_completions: vec![],
        hyperplane_completions: vec![],
    }
}

/// Completion instances for the product surface and the elliptic fourfold,
/// with their registry facts.
pub fn completions_corpus() -> CorpusFile {
    let mut registry = builders::e4_registry();
    registry.merge(builders::e4_hvc_registry());
    CorpusFile {
        schema_version: SCHEMA_VERSION,
        registry,
        symbol_cases: vec![],
        reciprocity_cases: vec![],
        product_completions: vec![builders::product_instance()],
        hyperplane_completions: vec![
            builders::hyperplane_instance(),
            builders::hyperplane_hvc_instance(),
        ],
    }
}
