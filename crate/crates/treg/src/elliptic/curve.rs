//! Chord-tangent group law and divisor-class arithmetic on `y^2 = x^3 + b x + c`.
//!
//! Points carry complex coordinates; for exactly representable inputs
//! (small integers and dyadics) the law is exact in f64 and the algebraic
//! identities hold on the nose. Degenerate cuspidal curves `y^2 = x^3` may be
//! constructed explicitly but refuse the group law: they exist only as loci
//! for degenerated integrands.

use super::lattice::Lattice;
use crate::error::{Result, TregError};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type C64 = Complex64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllipticCurve {
    pub b: C64,
    pub c: C64,
    /// Analytic presentation, when one is attached. No algebraic/analytic
    /// conversion is performed; consistency is only ever asserted through
    /// the differential-equation residual.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Lattice>,
    #[serde(default)]
    pub degenerate: bool,
}

/// A point of the curve: affine or the origin of the group law.
/// Derived equality is exact on coordinates; use `approx_eq` for geometry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CurvePoint {
    Affine { x: C64, y: C64 },
    Infinity,
}

impl CurvePoint {
    pub fn affine(x: f64, y: f64) -> Self {
        CurvePoint::Affine {
            x: C64::new(x, 0.0),
            y: C64::new(y, 0.0),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn approx_eq(&self, other: &CurvePoint, eps: f64) -> bool {
        match (self, other) {
            (CurvePoint::Infinity, CurvePoint::Infinity) => true,
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1 - x2).norm() <= eps && (y1 - y2).norm() <= eps
            }
            _ => false,
        }
    }
}

impl EllipticCurve {
    pub fn new(b: C64, c: C64) -> Result<Self> {
        let curve = EllipticCurve {
            b,
            c,
            lattice: None,
            degenerate: false,
        };
        if curve.discriminant().norm() == 0.0 {
            return Err(TregError::SingularCurve);
        }
        Ok(curve)
    }

    /// Attach an analytic presentation (periods with Im(w2/w1) > 0).
    pub fn with_lattice(mut self, w1: C64, w2: C64) -> Result<Self> {
        self.lattice = Some(Lattice::new(w1, w2)?);
        Ok(self)
    }

    /// Cuspidal specialization `y^2 = x^3` (or nodal for b != 0): group law disabled.
    pub fn degeneration(b: C64, c: C64) -> Self {
        EllipticCurve {
            b,
            c,
            lattice: None,
            degenerate: true,
        }
    }

    /// `-16 (4 b^3 + 27 c^2)`
    pub fn discriminant(&self) -> C64 {
        C64::new(-16.0, 0.0) * (4.0 * self.b.powu(3) + 27.0 * self.c.powu(2))
    }

    pub fn contains(&self, p: &CurvePoint, eps: f64) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                (y * y - (x * x * x + self.b * x + self.c)).norm() <= eps
            }
        }
    }

    fn check_on_curve(&self, p: &CurvePoint, eps: f64) -> Result<()> {
        if self.contains(p, eps) {
            Ok(())
        } else if let CurvePoint::Affine { x, y } = p {
            Err(TregError::PointNotOnCurve(x.to_string(), y.to_string()))
        } else {
            unreachable!()
        }
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: *x, y: -y },
        }
    }

    /// Chord-tangent addition with the point at infinity as identity.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint, eps: f64) -> Result<CurvePoint> {
        if self.degenerate {
            return Err(TregError::SingularCurve);
        }
        self.check_on_curve(p, eps)?;
        self.check_on_curve(q, eps)?;
        let (xp, yp, xq, yq) = match (p, q) {
            (CurvePoint::Infinity, _) => return Ok(*q),
            (_, CurvePoint::Infinity) => return Ok(*p),
            (CurvePoint::Affine { x: xp, y: yp }, CurvePoint::Affine { x: xq, y: yq }) => {
                (*xp, *yp, *xq, *yq)
            }
        };
        let lambda = if (xp - xq).norm() <= eps {
            if (yp + yq).norm() <= eps {
                // P + (-P) = O; covers the y = 0 two-torsion tangent as well
                return Ok(CurvePoint::Infinity);
            }
            (3.0 * xp * xp + self.b) / (2.0 * yp)
        } else {
            (yq - yp) / (xq - xp)
        };
        let xr = lambda * lambda - xp - xq;
        let yr = lambda * (xp - xr) - yp;
        Ok(CurvePoint::Affine { x: xr, y: yr })
    }

    pub fn mul(&self, n: i64, p: &CurvePoint, eps: f64) -> Result<CurvePoint> {
        let base = if n < 0 { self.neg(p) } else { *p };
        let mut acc = CurvePoint::Infinity;
        for _ in 0..n.unsigned_abs() {
            acc = self.add(&acc, &base, eps)?;
        }
        Ok(acc)
    }

    /// Abel-Jacobi style class point of a degree-0 divisor: `(+) n_i P_i`.
    pub fn divisor_class_point(&self, d: &PointDivisor, eps: f64) -> Result<CurvePoint> {
        let deg = d.degree();
        if deg != 0 {
            return Err(TregError::NonzeroDegree(deg));
        }
        let mut acc = CurvePoint::Infinity;
        for (p, n) in &d.entries {
            let term = self.mul(*n, p, eps)?;
            acc = self.add(&acc, &term, eps)?;
        }
        Ok(acc)
    }

    /// True iff `d` has degree 0 and its class point is the identity.
    /// Nonzero degree is not an error here; such a divisor is simply not principal.
    pub fn is_principal(&self, d: &PointDivisor, eps: f64) -> bool {
        if d.degree() != 0 {
            return false;
        }
        match self.divisor_class_point(d, eps) {
            Ok(p) => p.is_infinity(),
            Err(_) => false,
        }
    }
}

/// Formal integer combination of curve points.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct PointDivisor {
    pub entries: Vec<(CurvePoint, i64)>,
}

impl PointDivisor {
    pub fn new() -> Self {
        PointDivisor { entries: vec![] }
    }

    pub fn of(entries: Vec<(CurvePoint, i64)>) -> Self {
        let mut d = PointDivisor::new();
        for (p, n) in entries {
            d.push(p, n);
        }
        d
    }

    /// Add `n (p)`, merging approximately-equal support points.
    pub fn push(&mut self, p: CurvePoint, n: i64) {
        if n == 0 {
            return;
        }
        for (q, m) in &mut self.entries {
            if q.approx_eq(&p, 1e-12) {
                *m += n;
                return;
            }
        }
        self.entries.push((p, n));
    }

    pub fn degree(&self) -> i64 {
        self.entries.iter().map(|(_, n)| n).sum()
    }

    pub fn add(&self, other: &PointDivisor) -> PointDivisor {
        let mut out = self.clone();
        for (p, n) in &other.entries {
            out.push(*p, *n);
        }
        out
    }

    pub fn neg(&self) -> PointDivisor {
        PointDivisor {
            entries: self.entries.iter().map(|(p, n)| (*p, -n)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|(_, n)| *n == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-10;

    fn e1() -> EllipticCurve {
        EllipticCurve::new(C64::new(0.0, 0.0), C64::new(1.0, 0.0)).unwrap()
    }

    /// The six rational points of y^2 = x^3 + 1.
    fn rational_points() -> Vec<CurvePoint> {
        vec![
            CurvePoint::Infinity,
            CurvePoint::affine(0.0, 1.0),
            CurvePoint::affine(0.0, -1.0),
            CurvePoint::affine(-1.0, 0.0),
            CurvePoint::affine(2.0, 3.0),
            CurvePoint::affine(2.0, -3.0),
        ]
    }

    #[test]
    fn identity_and_inverse() {
        let e = e1();
        let p = CurvePoint::affine(0.0, 1.0);
        let sum = e.add(&p, &CurvePoint::Infinity, EPS).unwrap();
        assert!(sum.approx_eq(&p, 0.0));
        let sum = e.add(&p, &CurvePoint::affine(0.0, -1.0), EPS).unwrap();
        assert!(sum.is_infinity());
    }

    #[test]
    fn doubling_matches_tangent_slope() {
        // lambda = 3x^2/2y = 0 at (0,1): double = (0,-1)
        let e = e1();
        let p = CurvePoint::affine(0.0, 1.0);
        let d = e.add(&p, &p, EPS).unwrap();
        assert!(d.approx_eq(&CurvePoint::affine(0.0, -1.0), 0.0));
    }

    #[test]
    fn group_axioms_exhaustive_and_random() {
        let e = e1();
        let pts = rational_points();
        // closure + commutativity + associativity over the whole rational subgroup
        for p in &pts {
            for q in &pts {
                let pq = e.add(p, q, EPS).unwrap();
                assert!(e.contains(&pq, EPS));
                let qp = e.add(q, p, EPS).unwrap();
                assert!(pq.approx_eq(&qp, 1e-12));
                for r in &pts {
                    let left = e.add(&e.add(p, q, EPS).unwrap(), r, EPS).unwrap();
                    let right = e.add(p, &e.add(q, r, EPS).unwrap(), EPS).unwrap();
                    assert!(left.approx_eq(&right, 1e-9));
                }
            }
        }
        // and 100 random triples, exercising the same table
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 6) as usize
        };
        for _ in 0..100 {
            let (p, q, r) = (pts[next()], pts[next()], pts[next()]);
            let left = e.add(&e.add(&p, &q, EPS).unwrap(), &r, EPS).unwrap();
            let right = e.add(&p, &e.add(&q, &r, EPS).unwrap(), EPS).unwrap();
            assert!(left.approx_eq(&right, 1e-9));
        }
    }

    #[test]
    fn class_point_examples() {
        let e = e1();
        let p = CurvePoint::affine(0.0, 1.0);
        // (P) - (P) -> O
        let d = PointDivisor::of(vec![(p, 1), (p, -1)]);
        assert!(e.divisor_class_point(&d, EPS).unwrap().is_infinity());
        assert!(e.is_principal(&d, EPS));
        // 3(0,1) - 3(O) -> O since (0,1) is 3-torsion
        let d = PointDivisor::of(vec![(p, 3), (CurvePoint::Infinity, -3)]);
        assert!(e.divisor_class_point(&d, EPS).unwrap().is_infinity());
        assert!(e.is_principal(&d, EPS));
        // (0,1) - (O) -> (0,1), not principal
        let d = PointDivisor::of(vec![(p, 1), (CurvePoint::Infinity, -1)]);
        let cls = e.divisor_class_point(&d, EPS).unwrap();
        assert!(cls.approx_eq(&p, 1e-12));
        assert!(!e.is_principal(&d, EPS));
        // nonzero degree: not an error, just false
        let d = PointDivisor::of(vec![(p, 2)]);
        assert!(!e.is_principal(&d, EPS));
        assert!(matches!(
            e.divisor_class_point(&d, EPS),
            Err(TregError::NonzeroDegree(2))
        ));
    }

    #[test]
    fn class_point_is_homomorphism() {
        let e = e1();
        let pts = rational_points();
        let mut state = 0xdeadbeefcafef00du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 6) as usize
        };
        for _ in 0..50 {
            let (a, b, c2, d2) = (pts[next()], pts[next()], pts[next()], pts[next()]);
            let d1 = PointDivisor::of(vec![(a, 1), (b, -1)]);
            let d2 = PointDivisor::of(vec![(c2, 2), (d2, -2)]);
            let lhs = e.divisor_class_point(&d1.add(&d2), EPS).unwrap();
            let c1 = e.divisor_class_point(&d1, EPS).unwrap();
            let c2v = e.divisor_class_point(&d2, EPS).unwrap();
            let rhs = e.add(&c1, &c2v, EPS).unwrap();
            assert!(lhs.approx_eq(&rhs, 1e-9));
        }
    }

    #[test]
    fn error_paths() {
        let e = e1();
        let off = CurvePoint::affine(1.0, 1.0);
        assert!(matches!(
            e.add(&off, &CurvePoint::Infinity, EPS),
            Err(TregError::PointNotOnCurve(_, _))
        ));
        assert!(EllipticCurve::new(C64::new(0.0, 0.0), C64::new(0.0, 0.0)).is_err());
        let cusp = EllipticCurve::degeneration(C64::new(0.0, 0.0), C64::new(0.0, 0.0));
        let p = CurvePoint::affine(1.0, 1.0);
        assert!(matches!(e_cusp_add(&cusp, &p), Err(TregError::SingularCurve)));
    }

    fn e_cusp_add(e: &EllipticCurve, p: &CurvePoint) -> Result<CurvePoint> {
        e.add(p, p, EPS)
    }
}
