use std::collections::HashMap;

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::birational::to_quartic;
use super::constants::CurveLab;
use super::quartic::{pqr_from_quartic_point, QuarticPoint};
use super::CurveError;
use crate::param::{pair_from_pqr, ParamSolution, RejectionReason};
use crate::triangle::TrianglePair;
use crate::{CurvePoint, Rational};

/// Lattice offsets `(k, j)` with `|k| ≤ k_bound`, `|j| ≤ j_bound`, ordered by
/// ring `max(|k|, |j|)` and then lexicographically.
pub fn spiral_order(k_bound: u32, j_bound: u32) -> Vec<(i64, i64)> {
    let (kb, jb) = (i64::from(k_bound), i64::from(j_bound));
    let mut cells: Vec<(i64, i64)> = (-kb..=kb)
        .flat_map(|k| (-jb..=jb).map(move |j| (k, j)))
        .collect();
    cells.sort_by_key(|&(k, j)| (k.abs().max(j.abs()), k, j));
    cells
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedPair {
    pub k: i64,
    pub j: i64,
    pub point: CurvePoint,
    pub quartic: QuarticPoint<Rational>,
    pub solution: ParamSolution,
}

impl GeneratedPair {
    pub fn pair(&self) -> &TrianglePair {
        self.solution.pair()
    }
}

impl Serialize for GeneratedPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GeneratedPair", 5)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("j", &self.j)?;
        st.serialize_field("curve_point", &self.point)?;
        st.serialize_field("quartic_point", &self.quartic)?;
        st.serialize_field("solution", &self.solution)?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail")]
pub enum SkipReason {
    Infinity,
    ExceptionalLocus,
    ZeroAbscissa,
    Rejected(RejectionReason),
    /// Same canonical pair as an earlier lattice point.
    Duplicate { k: i64, j: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SkippedPoint {
    pub k: i64,
    pub j: i64,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationReport {
    pub k_bound: u32,
    pub j_bound: u32,
    pub pairs: Vec<GeneratedPair>,
    pub skipped: Vec<SkippedPoint>,
}

fn multiples(lab: &CurveLab, g: &CurvePoint, bound: u32) -> HashMap<i64, CurvePoint> {
    let curve = lab.curve();
    let mut out = HashMap::new();
    out.insert(0, CurvePoint::Infinity);
    let (mut pos, mut neg) = (CurvePoint::Infinity, CurvePoint::Infinity);
    let minus_g = curve.neg(g);
    for i in 1..=i64::from(bound) {
        pos = curve.add(&pos, g);
        neg = curve.add(&neg, &minus_g);
        out.insert(i, pos.clone());
        out.insert(-i, neg.clone());
    }
    out
}

fn evaluate(lab: &CurveLab, point: CurvePoint) -> Result<(CurvePoint, QuarticPoint<Rational>, ParamSolution), SkipReason> {
    let quartic = to_quartic(&point).map_err(|e| match e {
        CurveError::PointAtInfinity => SkipReason::Infinity,
        _ => SkipReason::ExceptionalLocus,
    })?;
    debug_assert!(lab.quartic().contains(&quartic));
    let (triple, _) =
        pqr_from_quartic_point(&quartic, &lab.constants().m).map_err(|_| SkipReason::ZeroAbscissa)?;
    let solution = pair_from_pqr(&triple).map_err(SkipReason::Rejected)?;
    Ok((point, quartic, solution))
}

/// Maps every `Q = P + k·G1 + j·G2` in the box through the quartic and the
/// parametric pipeline, keeping the first lattice point (in spiral order)
/// for each distinct canonical pair.
pub fn generate_pairs(lab: &CurveLab, k_bound: u32, j_bound: u32) -> GenerationReport {
    let curve = lab.curve();
    let base = lab.base();
    let g1 = multiples(lab, &lab.constants().g1, k_bound);
    let g2 = multiples(lab, &lab.constants().g2, j_bound);
    let order = spiral_order(k_bound, j_bound);

    let outcomes: Vec<_> = order
        .par_iter()
        .map(|&(k, j)| {
            let q = curve.add(&base, &curve.add(&g1[&k], &g2[&j]));
            debug_assert!(curve.contains(&q));
            evaluate(lab, q)
        })
        .collect();

    let mut first_seen: HashMap<TrianglePair, (i64, i64)> = HashMap::new();
    let mut report = GenerationReport {
        k_bound,
        j_bound,
        pairs: Vec::new(),
        skipped: Vec::new(),
    };
    for (&(k, j), outcome) in order.iter().zip(outcomes) {
        match outcome {
            Err(reason) => report.skipped.push(SkippedPoint { k, j, reason }),
            Ok((point, quartic, solution)) => {
                if let Some(&(k0, j0)) = first_seen.get(solution.pair()) {
                    report.skipped.push(SkippedPoint {
                        k,
                        j,
                        reason: SkipReason::Duplicate { k: k0, j: j0 },
                    });
                    continue;
                }
                first_seen.insert(solution.pair().clone(), (k, j));
                report.pairs.push(GeneratedPair {
                    k,
                    j,
                    point,
                    quartic,
                    solution,
                });
            }
        }
    }
    report
}
