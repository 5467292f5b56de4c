//! Shape classification of divisor components into horizontal/vertical
//! cycles (collapsed points times a moving part over the complementary
//! projection) and a residual part.

use super::descriptor::{FactorContent, SubvarietyDescriptor};
use super::precycle::CycleTable;
use crate::error::{Result, TregError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HvcComponent {
    pub cycle: String,
    /// (factor index, point name) of the collapsed part.
    pub point_part: Vec<(usize, String)>,
    /// Factor indices of the moving part.
    pub moving_part: Vec<usize>,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct HvcClassification {
    pub hvc: Vec<HvcComponent>,
    pub residual: Vec<(String, i64)>,
}

fn phvc_split(d: &SubvarietyDescriptor) -> Option<(Vec<(usize, String)>, Vec<usize>)> {
    let mut points = vec![];
    let mut moving = vec![];
    for (i, f) in d.factors.iter().enumerate() {
        match f {
            FactorContent::Point { name, .. } => points.push((i, name.clone())),
            _ => moving.push(i),
        }
    }
    if points.is_empty() || moving.is_empty() {
        None
    } else {
        Some((points, moving))
    }
}

/// Route each component of a formal divisor sum by the collapsed-point
/// shape test. The two parts partition the input.
pub fn classify_hvc(
    divisor: &[(String, i64)],
    cycles: &CycleTable,
) -> Result<HvcClassification> {
    let mut out = HvcClassification::default();
    for (name, mult) in divisor {
        if *mult == 0 {
            continue;
        }
        let d = cycles
            .get(name)
            .ok_or_else(|| TregError::UnknownCycle(name.clone()))?;
        match phvc_split(d) {
            Some((point_part, moving_part)) => out.hvc.push(HvcComponent {
                cycle: name.clone(),
                point_part,
                moving_part,
                multiplicity: *mult,
            }),
            None => out.residual.push((name.clone(), *mult)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::descriptor::SubvarietyKind;

    fn cycles() -> CycleTable {
        let mut t = CycleTable::new();
        t.insert(
            "p1xE2E3E4".into(),
            SubvarietyDescriptor::new(
                SubvarietyKind::ProductOfFactors,
                vec![
                    FactorContent::named_point("p1"),
                    FactorContent::Full,
                    FactorContent::Full,
                    FactorContent::Full,
                ],
                &[],
                "p1 x E2 x E3 x E4",
            )
            .unwrap(),
        );
        t.insert(
            "diag".into(),
            SubvarietyDescriptor::new(
                SubvarietyKind::HyperplaneSlice,
                vec![
                    FactorContent::dependent(&["t"]),
                    FactorContent::dependent(&["t"]),
                ],
                &["t"],
                "x1x2+y1y2=0",
            )
            .unwrap(),
        );
        t.insert(
            "pxV".into(),
            SubvarietyDescriptor::new(
                SubvarietyKind::ProjectionProduct,
                vec![
                    FactorContent::named_point("p"),
                    FactorContent::dependent(&["s"]),
                    FactorContent::dependent(&["s"]),
                ],
                &["s"],
                "p x V",
            )
            .unwrap(),
        );
        t
    }

    #[test]
    fn shape_routing() {
        let cycles = cycles();
        let divisor = vec![
            ("p1xE2E3E4".to_string(), 1),
            ("diag".to_string(), -2),
            ("pxV".to_string(), 3),
        ];
        let cls = classify_hvc(&divisor, &cycles).unwrap();
        assert_eq!(cls.hvc.len(), 2);
        assert_eq!(cls.residual, vec![("diag".to_string(), -2)]);
        let first = &cls.hvc[0];
        assert_eq!(first.cycle, "p1xE2E3E4");
        assert_eq!(first.point_part, vec![(0, "p1".to_string())]);
        assert_eq!(first.moving_part, vec![1, 2, 3]);
    }

    #[test]
    fn partition_covers_input() {
        let cycles = cycles();
        let divisor = vec![("diag".to_string(), 5), ("pxV".to_string(), -5)];
        let cls = classify_hvc(&divisor, &cycles).unwrap();
        assert_eq!(cls.hvc.len() + cls.residual.len(), 2);
    }
}
