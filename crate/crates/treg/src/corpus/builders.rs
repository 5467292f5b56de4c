//! Programmatic construction of the shipped corpora.
//!
//! The JSON corpus files under `corpus/` are generated from these builders
//! (`treg corpus-gen`); a test pins the shipped bytes to the builder output.
//! All restriction entries for one component are computed against a single
//! local equation: `z - a` at a finite point `a`, `1/z` at infinity, the
//! vanishing coordinate factor on fibers of a product, `y` at a two-torsion
//! point of an elliptic curve, and `x/y` at its origin.

use crate::cycles::complete::{HyperplaneInstance, NamedPoint, ProductDivisorPoint, ProductInstance};
use crate::cycles::descriptor::{FactorContent, SubvarietyDescriptor, SubvarietyKind};
use crate::cycles::precycle::{CycleTable, DivisorEntry, Precycle};
use crate::elliptic::curve::CurvePoint;
use crate::grat::GRat;
use crate::symbolic::factored::{FactoredFunction, PolyEval};
use crate::symbolic::registry::{AmbientKind, Registry};
use serde_json::json;

fn linear_factor_name(prefix: &str, a: i64) -> String {
    match a.cmp(&0) {
        std::cmp::Ordering::Equal => prefix.to_string(),
        std::cmp::Ordering::Greater => format!("{prefix}-{a}"),
        std::cmp::Ordering::Less => format!("{prefix}+{}", -a),
    }
}

/// P1 with marked rational points, P1 x P1 with its coordinate hyperplanes,
/// and the fiber lines, all with complete divisor/restriction tables.
pub fn p1_registry() -> Registry {
    let mut reg = Registry::new();
    reg.add_ambient("pt", AmbientKind::Point, &[]);

    // --- P1 with finite points 0, 1, 2, -1, 3 and infinity ---
    reg.add_ambient("P1", AmbientKind::Curve, &["z"]);
    let marks: [i64; 5] = [0, 1, 2, -1, 3];
    for a in marks {
        reg.add_component(&format!("P1@{a}"), "P1", "pt", &format!("z={a}"), &[]);
    }
    reg.add_component("P1@inf", "P1", "pt", "z=inf", &[]);
    for a in marks {
        let name = linear_factor_name("z", a);
        let mut restrictions = vec![];
        for b in marks {
            let value = if a == b {
                GRat::one()
            } else {
                GRat::from_int(b - a)
            };
            restrictions.push((
                format!("P1@{b}"),
                FactoredFunction::constant_fn(value, "pt"),
            ));
        }
        restrictions.push(("P1@inf".to_string(), FactoredFunction::one("pt")));
        reg.add_factor(
            &name,
            "P1",
            &[(&format!("P1@{a}"), 1), ("P1@inf", -1)],
            restrictions
                .iter()
                .map(|(c, f)| (c.as_str(), f.clone()))
                .collect(),
            Some(PolyEval::linear(0, GRat::from_int(a))),
        );
    }
    // Steinberg pair (z, 1-z) on P1
    reg.add_steinberg_pair(
        FactoredFunction::factor("z", "P1"),
        FactoredFunction::monomial("P1", -GRat::one(), &[("z-1", 1)]),
    );

    // --- the two fiber lines ---
    reg.add_ambient("sline", AmbientKind::Curve, &["s"]);
    reg.add_component("sline@0", "sline", "pt", "s=0", &[]);
    reg.add_component("sline@inf", "sline", "pt", "s=inf", &[]);
    reg.add_factor(
        "sline.s",
        "sline",
        &[("sline@0", 1), ("sline@inf", -1)],
        vec![
            ("sline@0", FactoredFunction::one("pt")),
            ("sline@inf", FactoredFunction::one("pt")),
        ],
        Some(PolyEval::linear(0, GRat::zero())),
    );

    reg.add_ambient("tline", AmbientKind::Curve, &["t"]);
    for c in ["0", "1", "inf"] {
        reg.add_component(&format!("tline@{c}"), "tline", "pt", &format!("t={c}"), &[]);
    }
    reg.add_factor(
        "tline.t",
        "tline",
        &[("tline@0", 1), ("tline@inf", -1)],
        vec![
            ("tline@0", FactoredFunction::one("pt")),
            ("tline@1", FactoredFunction::one("pt")),
            ("tline@inf", FactoredFunction::one("pt")),
        ],
        Some(PolyEval::linear(0, GRat::zero())),
    );
    reg.add_factor(
        "tline.t-1",
        "tline",
        &[("tline@1", 1), ("tline@inf", -1)],
        vec![
            ("tline@0", FactoredFunction::constant_fn(-GRat::one(), "pt")),
            ("tline@1", FactoredFunction::one("pt")),
            ("tline@inf", FactoredFunction::one("pt")),
        ],
        Some(PolyEval::linear(0, GRat::one())),
    );
    reg.add_steinberg_pair(
        FactoredFunction::factor("tline.t", "tline"),
        FactoredFunction::monomial("tline", -GRat::one(), &[("tline.t-1", 1)]),
    );

    // --- P1 x P1 with coordinates (t, s) ---
    reg.add_ambient("P1xP1", AmbientKind::Surface, &["t", "s"]);
    for (tc, label) in [("0", "0 x P1"), ("1", "1 x P1"), ("inf", "inf x P1")] {
        reg.add_component(
            &format!("P1xP1@t={tc}"),
            "P1xP1",
            "sline",
            label,
            &[
                ("sline@0", &format!("P1xP1@({tc},0)") as &str),
                ("sline@inf", &format!("P1xP1@({tc},inf)")),
            ],
        );
    }
    for (sc, label) in [("0", "P1 x 0"), ("inf", "P1 x inf")] {
        reg.add_component(
            &format!("P1xP1@s={sc}"),
            "P1xP1",
            "tline",
            label,
            &[
                ("tline@0", &format!("P1xP1@(0,{sc})") as &str),
                ("tline@1", &format!("P1xP1@(1,{sc})")),
                ("tline@inf", &format!("P1xP1@(inf,{sc})")),
            ],
        );
    }

    // restriction entries live on the component's own variety
    let one_s = FactoredFunction::one("sline");
    let one_t = FactoredFunction::one("tline");
    reg.add_factor(
        "t",
        "P1xP1",
        &[("P1xP1@t=0", 1), ("P1xP1@t=inf", -1)],
        vec![
            ("P1xP1@t=0", one_s.clone()),
            ("P1xP1@t=1", one_s.clone()),
            ("P1xP1@t=inf", one_s.clone()),
            ("P1xP1@s=0", FactoredFunction::factor("tline.t", "tline")),
            ("P1xP1@s=inf", FactoredFunction::factor("tline.t", "tline")),
        ],
        Some(PolyEval::linear(0, GRat::zero())),
    );
    reg.add_factor(
        "t-1",
        "P1xP1",
        &[("P1xP1@t=1", 1), ("P1xP1@t=inf", -1)],
        vec![
            (
                "P1xP1@t=0",
                FactoredFunction::constant_fn(-GRat::one(), "sline"),
            ),
            ("P1xP1@t=1", one_s.clone()),
            ("P1xP1@t=inf", one_s.clone()),
            ("P1xP1@s=0", FactoredFunction::factor("tline.t-1", "tline")),
            ("P1xP1@s=inf", FactoredFunction::factor("tline.t-1", "tline")),
        ],
        Some(PolyEval::linear(0, GRat::one())),
    );
    reg.add_factor(
        "s",
        "P1xP1",
        &[("P1xP1@s=0", 1), ("P1xP1@s=inf", -1)],
        vec![
            ("P1xP1@s=0", one_t.clone()),
            ("P1xP1@s=inf", one_t.clone()),
            ("P1xP1@t=0", FactoredFunction::factor("sline.s", "sline")),
            ("P1xP1@t=1", FactoredFunction::factor("sline.s", "sline")),
            ("P1xP1@t=inf", FactoredFunction::factor("sline.s", "sline")),
        ],
        Some(PolyEval::linear(1, GRat::zero())),
    );
    reg.add_steinberg_pair(
        FactoredFunction::factor("t", "P1xP1"),
        FactoredFunction::monomial("P1xP1", -GRat::one(), &[("t-1", 1)]),
    );

    reg
}

/// The six rational points of y^2 = x^3 + 1, as (name, coordinates).
/// None is the origin of the group law.
fn e_points() -> Vec<(&'static str, Option<(i64, i64)>)> {
    vec![
        ("O", None),
        ("(0,1)", Some((0, 1))),
        ("(0,-1)", Some((0, -1))),
        ("(-1,0)", Some((-1, 0))),
        ("(2,3)", Some((2, 3))),
        ("(2,-3)", Some((2, -3))),
    ]
}

/// Divisor multiplicity and unit-part restriction of x - a at one point of E.
fn e_factor_at_point(a: i64, p: Option<(i64, i64)>) -> (i64, GRat) {
    match p {
        None => (-2, GRat::one()), // at O, against pi = x/y
        Some((px, py)) => {
            if px != a {
                (0, GRat::from_int(px - a))
            } else if py != 0 {
                (1, GRat::one()) // pi = x - a
            } else {
                // double zero, pi = y: unit is (x-a)/y^2 -> 1/(3a^2)
                (2, GRat::from_ratio(1, 3 * a * a))
            }
        }
    }
}

fn add_elliptic_curve_ambient(reg: &mut Registry, ambient: &str, coord: usize) {
    reg.add_ambient(
        ambient,
        AmbientKind::Curve,
        if coord == 0 { &["x", "y"] } else { &["x2", "y2"] },
    );
    for (name, _) in e_points() {
        reg.add_component(
            &format!("{ambient}@{name}"),
            ambient,
            "pt",
            &format!("{name} on {ambient}"),
            &[],
        );
    }
    for a in [0i64, 2, -1] {
        let fname = format!("{ambient}.{}", linear_factor_name("x", a));
        let mut divisor = vec![];
        let mut restrictions = vec![];
        for (pname, p) in e_points() {
            let (mult, unit) = e_factor_at_point(a, p);
            if mult != 0 {
                divisor.push((format!("{ambient}@{pname}"), mult));
            }
            restrictions.push((
                format!("{ambient}@{pname}"),
                FactoredFunction::constant_fn(unit, "pt"),
            ));
        }
        reg.add_factor(
            &fname,
            ambient,
            &divisor
                .iter()
                .map(|(c, m)| (c.as_str(), *m))
                .collect::<Vec<_>>(),
            restrictions
                .iter()
                .map(|(c, f)| (c.as_str(), f.clone()))
                .collect(),
            Some(PolyEval::linear(0, GRat::from_int(a))),
        );
    }
}

/// E itself, plus E1 x E2 with its vertical/horizontal fibration components.
pub fn elliptic_registry() -> Registry {
    let mut reg = Registry::new();
    reg.add_ambient("pt", AmbientKind::Point, &[]);
    add_elliptic_curve_ambient(&mut reg, "E", 0);
    add_elliptic_curve_ambient(&mut reg, "E1c", 0);
    add_elliptic_curve_ambient(&mut reg, "E2c", 0);

    reg.add_ambient("E1xE2", AmbientKind::Surface, &["x1", "y1", "x2", "y2"]);
    for (pname, _) in e_points() {
        let nested: Vec<(String, String)> = e_points()
            .iter()
            .map(|(qname, _)| {
                (
                    format!("E2c@{qname}"),
                    format!("E1xE2@({pname},{qname})"),
                )
            })
            .collect();
        reg.add_component(
            &format!("E1xE2@V{pname}"),
            "E1xE2",
            "E2c",
            &format!("{pname} x E2"),
            &nested
                .iter()
                .map(|(a, b)| (a.as_str(), b.as_str()))
                .collect::<Vec<_>>(),
        );
    }
    for (qname, _) in e_points() {
        let nested: Vec<(String, String)> = e_points()
            .iter()
            .map(|(pname, _)| {
                (
                    format!("E1c@{pname}"),
                    format!("E1xE2@({pname},{qname})"),
                )
            })
            .collect();
        reg.add_component(
            &format!("E1xE2@H{qname}"),
            "E1xE2",
            "E1c",
            &format!("E1 x {qname}"),
            &nested
                .iter()
                .map(|(a, b)| (a.as_str(), b.as_str()))
                .collect::<Vec<_>>(),
        );
    }

    // factor x_i - a on the product: divisor over fibers of its own leg,
    // restriction to the other leg's fibers is the curve factor
    for (leg, coord, curve) in [(1u8, 0usize, "E1c"), (2u8, 2usize, "E2c")] {
        for a in [0i64, 2, -1] {
            let base = linear_factor_name("x", a);
            let fname = format!("E1xE2.x{leg}{}", &base[1..]);
            let mut divisor: Vec<(String, i64)> = vec![];
            let mut restrictions: Vec<(String, FactoredFunction)> = vec![];
            for (pname, p) in e_points() {
                let (mult, unit) = e_factor_at_point(a, p);
                let own_fiber = if leg == 1 {
                    format!("E1xE2@V{pname}")
                } else {
                    format!("E1xE2@H{pname}")
                };
                if mult != 0 {
                    divisor.push((own_fiber.clone(), mult));
                }
                restrictions.push((
                    own_fiber,
                    FactoredFunction::constant_fn(unit.clone(), if leg == 1 { "E2c" } else { "E1c" }),
                ));
                let other_fiber = if leg == 1 {
                    format!("E1xE2@H{pname}")
                } else {
                    format!("E1xE2@V{pname}")
                };
                restrictions.push((
                    other_fiber,
                    FactoredFunction::factor(&format!("{curve}.{base}"), curve),
                ));
            }
            reg.add_factor(
                &fname,
                "E1xE2",
                &divisor
                    .iter()
                    .map(|(c, m)| (c.as_str(), *m))
                    .collect::<Vec<_>>(),
                restrictions
                    .iter()
                    .map(|(c, f)| (c.as_str(), f.clone()))
                    .collect(),
                Some(PolyEval::linear(coord, GRat::from_int(a))),
            );
        }
    }

    reg
}

fn curve_point(p: Option<(i64, i64)>) -> CurvePoint {
    match p {
        None => CurvePoint::Infinity,
        Some((x, y)) => CurvePoint::affine(x as f64, y as f64),
    }
}

/// Product completion instance on E1 x E2: div(f) = (p1,q1) - (p2,q2).
pub fn product_instance() -> ProductInstance {
    ProductInstance {
        id: "product-e1e2".into(),
        ambient: "E1xE2".into(),
        seed_id: "f".into(),
        seed_section: FactoredFunction::factor("product-e1e2::f", "E1xE2"),
        base_point: NamedPoint::concrete("O", curve_point(None)),
        points: vec![
            ProductDivisorPoint {
                p: NamedPoint::concrete("(0,1)", curve_point(Some((0, 1)))),
                q: NamedPoint::concrete("(2,3)", curve_point(Some((2, 3)))),
                mult: 1,
            },
            ProductDivisorPoint {
                p: NamedPoint::concrete("(2,-3)", curve_point(Some((2, -3)))),
                q: NamedPoint::concrete("(0,-1)", curve_point(Some((0, -1)))),
                mult: -1,
            },
        ],
    }
}

fn dep(params: &[&str]) -> FactorContent {
    FactorContent::dependent(params)
}

fn e4_cycles() -> CycleTable {
    let mut t = CycleTable::new();
    let slice = |label: &str| {
        SubvarietyDescriptor::new(
            SubvarietyKind::HyperplaneSlice,
            vec![dep(&["u"]), dep(&["u"]), dep(&["u"]), dep(&["u"])],
            &["u"],
            label,
        )
        .unwrap()
    };
    // the seed surface S needs two parameters
    t.insert(
        "S".into(),
        SubvarietyDescriptor::new(
            SubvarietyKind::HyperplaneSlice,
            vec![
                dep(&["u", "v"]),
                dep(&["u", "v"]),
                dep(&["u", "v"]),
                dep(&["u", "v"]),
            ],
            &["u", "v"],
            "S = H1.H2.X",
        )
        .unwrap(),
    );
    t.insert("A".into(), slice("A = H1.H2.H3.X"));
    t.insert("B".into(), slice("B = H1.H2.H4.X"));
    // projection products Pr_{1,2,3}(A) x E4, etc.
    let proj_e4 = |label: &str| {
        SubvarietyDescriptor::new(
            SubvarietyKind::ProjectionProduct,
            vec![dep(&["t"]), dep(&["t"]), dep(&["t"]), FactorContent::Full],
            &["t"],
            label,
        )
        .unwrap()
    };
    t.insert("Z1".into(), proj_e4("Pr123(A) x E4"));
    t.insert("Z2".into(), proj_e4("Pr123(B) x E4"));
    t.insert("PrAxE4".into(), proj_e4("Pr123(A) x E4 (correction)"));
    // Bertini curves through the paired points, times E4
    t.insert("C1xE4".into(), proj_e4("C1 x E4"));
    t.insert("C2xE4".into(), proj_e4("C2 x E4"));

    // concrete points of E1 x E2 x E3 used for the point fibers
    let triple = |name: &str, p: CurvePoint| FactorContent::concrete_point(name, p);
    let pf = |label: &str, pts: [(&str, CurvePoint); 3]| {
        SubvarietyDescriptor::new(
            SubvarietyKind::PointFiber,
            vec![
                triple(pts[0].0, pts[0].1),
                triple(pts[1].0, pts[1].1),
                triple(pts[2].0, pts[2].1),
                FactorContent::Full,
            ],
            &[],
            label,
        )
        .unwrap()
    };
    let o = CurvePoint::Infinity;
    let p01 = CurvePoint::affine(0.0, 1.0);
    let p0m1 = CurvePoint::affine(0.0, -1.0);
    let p23 = CurvePoint::affine(2.0, 3.0);
    let pm10 = CurvePoint::affine(-1.0, 0.0);
    t.insert(
        "a1xE4".into(),
        pf("a1 x E4", [("a11", p01), ("a12", p23), ("a13", o)]),
    );
    t.insert(
        "b1xE4".into(),
        pf("b1 x E4", [("b11", p0m1), ("b12", pm10), ("b13", p23)]),
    );
    t.insert(
        "a2xE4".into(),
        pf("a2 x E4", [("a21", p23), ("a22", p01), ("a23", p0m1)]),
    );
    t.insert(
        "b2xE4".into(),
        pf("b2 x E4", [("b21", o), ("b22", p23), ("b23", p01)]),
    );

    // projection-point components Pr(W) x c4
    let proj_pt = |label: &str, pt_name: &str, pt: CurvePoint| {
        SubvarietyDescriptor::new(
            SubvarietyKind::ProjectionProduct,
            vec![
                dep(&["t"]),
                dep(&["t"]),
                dep(&["t"]),
                FactorContent::concrete_point(pt_name, pt),
            ],
            &["t"],
            label,
        )
        .unwrap()
    };
    t.insert("PrA_x_a41".into(), proj_pt("Pr123(A) x a41", "a41", p01));
    t.insert("PrA_x_b41".into(), proj_pt("Pr123(A) x b41", "b41", p23));
    t.insert("PrB_x_b41".into(), proj_pt("Pr123(B) x b41", "b41", p23));

    // Pr123(S) x b41: the surface projection collapsed at the fourth factor
    t.insert(
        "PrS_x_b41".into(),
        SubvarietyDescriptor::new(
            SubvarietyKind::ProjectionProduct,
            vec![
                dep(&["u", "v"]),
                dep(&["u", "v"]),
                dep(&["u", "v"]),
                FactorContent::concrete_point("b41", p23),
            ],
            &["u", "v"],
            "Pr123(S) x b41",
        )
        .unwrap(),
    );
    t
}

/// Registry facts for the fourfold instances: HVC pullback data for A and B,
/// Bertini curves through the paired point triples, the genericity and
/// Picard-restriction inputs, and the matched projection-point pairs.
pub fn e4_registry() -> Registry {
    let mut reg = Registry::new();
    reg.add_fact(
        "e4-hyperplane/picard-restriction:S",
        "picard-restriction",
        json!({"surface": "S"}),
    );
    reg.add_fact(
        "e4-hyperplane/genericity:H3",
        "hyperplane-genericity",
        json!({"hyperplane": "H3"}),
    );
    reg.add_fact(
        "e4-hyperplane/hvc:A",
        "hvc-pullback",
        json!({
            "target": "A",
            "variety": "Z1",
            "section": "beta1",
            "bundle": "J1",
            "point_fibers": [
                {"cycle": "a1xE4", "mult": 1},
                {"cycle": "a2xE4", "mult": 2}
            ],
            "projection_points": [
                {"cycle": "PrA_x_a41", "mult": 1}
            ]
        }),
    );
    reg.add_fact(
        "e4-hyperplane/hvc:B",
        "hvc-pullback",
        json!({
            "target": "B",
            "variety": "Z2",
            "section": "beta2",
            "bundle": "J2",
            "point_fibers": [
                {"cycle": "b1xE4", "mult": 1},
                {"cycle": "b2xE4", "mult": 2}
            ],
            "projection_points": [
                {"cycle": "PrB_x_b41", "mult": 1}
            ]
        }),
    );
    reg.add_fact(
        "e4-hyperplane/bertini:a1-b1",
        "bertini-curve",
        json!({
            "curve": "C1xE4",
            "plus": "a1xE4",
            "minus": "b1xE4",
            "section": "gamma1",
            "bundle": "R1"
        }),
    );
    reg.add_fact(
        "e4-hyperplane/bertini:a2-b2",
        "bertini-curve",
        json!({
            "curve": "C2xE4",
            "plus": "a2xE4",
            "minus": "b2xE4",
            "section": "gamma2",
            "bundle": "R2"
        }),
    );
    reg.add_fact(
        "e4-hyperplane/projection-pair:1",
        "projection-pair",
        json!({
            "plus": "PrA_x_a41",
            "via": "PrA_x_b41",
            "minus": "PrB_x_b41",
            "nu_variety": "PrAxE4",
            "nu_section": "nu1",
            "nu_bundle": "F1",
            "g_variety": "PrS_x_b41",
            "g_section": "g1"
        }),
    );
    reg
}

/// The two-target instance: div(f)_S = A - B with f a rational function.
pub fn hyperplane_instance() -> HyperplaneInstance {
    HyperplaneInstance {
        id: "e4-hyperplane".into(),
        ambient: "E1xE2xE3xE4".into(),
        seed: Precycle {
            id: "f".into(),
            section: FactoredFunction::factor("e4-hyperplane::f", "E1xE2xE3xE4"),
            variety: "S".into(),
            bundle: Default::default(),
            divisor: vec![
                DivisorEntry {
                    cycle: "A".into(),
                    mult: 1,
                },
                DivisorEntry {
                    cycle: "B".into(),
                    mult: -1,
                },
            ],
        },
        cycles: e4_cycles(),
        target_a: "A".into(),
        target_b: Some("B".into()),
    }
}

/// The HVC-route instance: div(sigma)_S = A - HVC with the HVC written as
/// curves on S (collapsed point times a slice of the complementary factors).
/// Both signed HVC families cancel through the same correction machinery.
pub fn hyperplane_hvc_instance() -> HyperplaneInstance {
    let mut cycles = e4_cycles();
    let p01 = CurvePoint::affine(0.0, 1.0);
    let p23 = CurvePoint::affine(2.0, 3.0);
    let pm10 = CurvePoint::affine(-1.0, 0.0);
    // p_i x W_i: fixed point in the first factor, moving slice in the rest
    let p_times_w = |label: &str, name: &str, p: CurvePoint| {
        SubvarietyDescriptor::new(
            SubvarietyKind::ProjectionProduct,
            vec![
                FactorContent::concrete_point(name, p),
                dep(&["w"]),
                dep(&["w"]),
                dep(&["w"]),
            ],
            &["w"],
            label,
        )
        .unwrap()
    };
    cycles.insert("p1xW1".into(), p_times_w("p1 x W1", "p1", p01));
    cycles.insert("p2xW2".into(), p_times_w("p2 x W2", "p2", p23));
    // W4 x p4: fourth factor collapsed
    cycles.insert(
        "W4xp4".into(),
        SubvarietyDescriptor::new(
            SubvarietyKind::ProjectionProduct,
            vec![
                dep(&["w"]),
                dep(&["w"]),
                dep(&["w"]),
                FactorContent::concrete_point("p4", pm10),
            ],
            &["w"],
            "W4 x p4",
        )
        .unwrap(),
    );
    HyperplaneInstance {
        id: "e4-hvc".into(),
        ambient: "E1xE2xE3xE4".into(),
        seed: Precycle {
            id: "sigma".into(),
            section: FactoredFunction::factor("e4-hvc::sigma", "E1xE2xE3xE4")
                .with_bundle(&[("L", 1)]),
            variety: "S".into(),
            bundle: [("L".to_string(), 1)].into_iter().collect(),
            divisor: vec![
                DivisorEntry {
                    cycle: "A".into(),
                    mult: 1,
                },
                DivisorEntry {
                    cycle: "p1xW1".into(),
                    mult: -1,
                },
                DivisorEntry {
                    cycle: "p2xW2".into(),
                    mult: -2,
                },
                DivisorEntry {
                    cycle: "W4xp4".into(),
                    mult: -1,
                },
            ],
        },
        cycles,
        target_a: "A".into(),
        target_b: None,
    }
}

/// Facts for the HVC-route instance: pairs the pullback's HVC against the
/// seed's, with the projection pair staying over the same base Pr123(A).
pub fn e4_hvc_registry() -> Registry {
    let mut reg = Registry::new();
    reg.add_fact(
        "e4-hvc/picard-restriction:S",
        "picard-restriction",
        json!({"surface": "S"}),
    );
    reg.add_fact(
        "e4-hvc/genericity:H3",
        "hyperplane-genericity",
        json!({"hyperplane": "H3"}),
    );
    reg.add_fact(
        "e4-hvc/hvc:A",
        "hvc-pullback",
        json!({
            "target": "A",
            "variety": "Z1",
            "section": "beta",
            "bundle": "J",
            "point_fibers": [
                {"cycle": "a1xE4", "mult": 1},
                {"cycle": "a2xE4", "mult": 2}
            ],
            "projection_points": [
                {"cycle": "PrA_x_a41", "mult": 1}
            ]
        }),
    );
    reg.add_fact(
        "e4-hvc/bertini:a1-p1W1",
        "bertini-curve",
        json!({
            "curve": "C1xE4",
            "plus": "a1xE4",
            "minus": "p1xW1",
            "section": "gamma1",
            "bundle": "R1"
        }),
    );
    reg.add_fact(
        "e4-hvc/bertini:a2-p2W2",
        "bertini-curve",
        json!({
            "curve": "C2xE4",
            "plus": "a2xE4",
            "minus": "p2xW2",
            "section": "gamma2",
            "bundle": "R2"
        }),
    );
    reg.add_fact(
        "e4-hvc/projection-pair:1",
        "projection-pair",
        json!({
            "plus": "PrA_x_a41",
            "via": "W4xp4",
            "minus": "W4xp4",
            "nu_variety": "PrAxE4",
            "nu_section": "nu1",
            "nu_bundle": "F1"
        }),
    );
    reg
}
