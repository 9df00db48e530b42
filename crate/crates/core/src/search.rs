//! Bounded brute-force search over integer `(p, q, r)`.
//!
//! Only one representative per projective class is scanned: `gcd = 1` and
//! the first nonzero coordinate positive. Both the equations and the
//! canonical pair are invariant under scaling and global sign, so the other
//! representatives add nothing.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_integer::{Integer as IntegerOps, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::arith::perfect_square_root;
use crate::param::{factor_a, factor_b, has_trivial_factor, pair_from_pqr, ParamSolution, ParamTriple, RejectionReason};
use crate::published;
use crate::scalar::Scalar;
use crate::triangle::TrianglePair;
use crate::{Integer, Rational};

/// Largest bound for which `-A·B` is guaranteed to fit in `i128`.
///
/// `|A| ≤ 11·n³` and `|B| ≤ 24·n³` for `n = |p|+|q|+|r|`, so the product
/// stays below `264·n⁶`.
pub const I128_BOUND_LIMIT: u64 = 500_000;

/// Divides by the gcd and fixes the global sign so the first nonzero
/// coordinate is positive. `None` for the zero triple.
pub fn normalize_triple<T>(p: &T, q: &T, r: &T) -> Option<ParamTriple<T>>
where
    T: IntegerOps + Signed + Clone,
{
    let g = p.gcd(q).gcd(r);
    if g.is_zero() {
        return None;
    }
    let lead = [p, q, r].into_iter().find(|v| !v.is_zero())?;
    let g = if lead.is_negative() { -g } else { g };
    Some(ParamTriple::new(p.clone() / g.clone(), q.clone() / g.clone(), r.clone() / g))
}

/// True when the triple is its own normalization.
pub fn is_canonical_representative<T>(triple: &ParamTriple<T>) -> bool
where
    T: IntegerOps + Signed + Clone,
{
    normalize_triple(&triple.p, &triple.q, &triple.r).as_ref() == Some(triple)
}

/// One distinct canonical pair and every scanned triple that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    /// Solution at the smallest triple (by `|p|+|q|+|r|`, then lexicographically).
    pub solution: ParamSolution,
    pub triples: Vec<ParamTriple<Integer>>,
}

impl SearchHit {
    pub fn pair(&self) -> &TrianglePair {
        self.solution.pair()
    }

    /// Which published pair this is, if any; `None` marks a new find.
    pub fn published_label(&self) -> Option<&'static str> {
        published::identify(self.pair())
    }
}

impl Serialize for SearchHit {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SearchHit", 3)?;
        st.serialize_field("published", &self.published_label())?;
        st.serialize_field("solution", &self.solution)?;
        st.serialize_field("triples", &self.triples)?;
        st.end()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub bound: u64,
    /// Canonical representatives examined.
    pub triples_scanned: u64,
    /// Representatives for which `-A·B` was an exact square.
    pub square_candidates: u64,
    pub rejections: BTreeMap<RejectionReason, u64>,
    /// Sorted by perimeter, then by the first triangle's roots.
    pub solutions: Vec<SearchHit>,
    /// Nontrivial triples with `A = B = 0`, where every `u` solves the residual.
    pub special_flags: Vec<ParamTriple<Integer>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    /// Pairs that are not among the published ones.
    pub fn discrepancies(&self) -> impl Iterator<Item = &SearchHit> {
        self.solutions.iter().filter(|h| h.published_label().is_none())
    }

    pub fn pairs(&self) -> impl Iterator<Item = &TrianglePair> {
        self.solutions.iter().map(SearchHit::pair)
    }
}

#[derive(Default)]
struct SliceResult {
    scanned: u64,
    candidates: u64,
    rejections: BTreeMap<RejectionReason, u64>,
    hits: Vec<(ParamTriple<Integer>, ParamSolution)>,
    special: Vec<ParamTriple<Integer>>,
}

impl SliceResult {
    fn reject(&mut self, reason: RejectionReason) {
        *self.rejections.entry(reason).or_default() += 1;
    }

    fn merge(mut self, other: SliceResult) -> SliceResult {
        self.scanned += other.scanned;
        self.candidates += other.candidates;
        for (reason, n) in other.rejections {
            *self.rejections.entry(reason).or_default() += n;
        }
        self.hits.extend(other.hits);
        self.special.extend(other.special);
        self
    }
}

/// Scans every canonical representative whose first coordinate is `p`.
/// `T` is the integer type the cheap filters run in.
fn scan_slice<T>(p: i64, bound: i64) -> SliceResult
where
    T: Scalar + Roots + FromPrimitive + ToPrimitive,
{
    let mut out = SliceResult::default();
    let rest = bound - p;
    for q in -rest..=rest {
        let rest_r = rest - q.abs();
        for r in -rest_r..=rest_r {
            if p == 0 && (q < 0 || (q == 0 && r <= 0)) {
                continue;
            }
            if num_integer::gcd(num_integer::gcd(p, q), r) != 1 {
                continue;
            }
            out.scanned += 1;
            if has_trivial_factor(&p, &q, &r) {
                out.reject(RejectionReason::TrivialCondition);
                continue;
            }
            let (tp, tq, tr) = (T::lit(p), T::lit(q), T::lit(r));
            let a = factor_a(&tp, &tq, &tr);
            let b = factor_b(&tp, &tq, &tr);
            if a.is_zero() {
                if b.is_zero() {
                    out.special.push(ParamTriple::new(p, q, r).map(|&v| Integer::from(v)));
                }
                out.reject(RejectionReason::ANotInvertible);
                continue;
            }
            if perfect_square_root(&-(a * b)).is_none() {
                out.reject(RejectionReason::NotASquare);
                continue;
            }
            out.candidates += 1;
            let triple = ParamTriple::new(p, q, r).map(|&v| Integer::from(v));
            match pair_from_pqr(&triple.map(|v| Rational::from_integer(v.clone()))) {
                Ok(solution) => out.hits.push((triple, solution)),
                Err(reason) => out.reject(reason),
            }
        }
    }
    out
}

fn triple_order_key(t: &ParamTriple<Integer>) -> (Integer, Integer, Integer, Integer) {
    (t.l1_norm(), t.p.clone(), t.q.clone(), t.r.clone())
}

/// Runs the search over `|p| + |q| + |r| ≤ bound` on `workers` threads.
/// The report does not depend on the worker count.
pub fn search(bound: u64, workers: usize) -> SearchReport {
    assert!(bound >= 1, "search bound must be at least 1");
    let started = Instant::now();
    let b = i64::try_from(bound).expect("bound fits in i64");
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let merged = pool.install(|| {
        (0..=b)
            .into_par_iter()
            .map(|p| {
                if bound <= I128_BOUND_LIMIT {
                    scan_slice::<i128>(p, b)
                } else {
                    scan_slice::<Integer>(p, b)
                }
            })
            .reduce(SliceResult::default, SliceResult::merge)
    });

    let mut grouped: BTreeMap<TrianglePair, Vec<(ParamTriple<Integer>, ParamSolution)>> = BTreeMap::new();
    for (triple, solution) in merged.hits {
        grouped.entry(solution.pair().clone()).or_default().push((triple, solution));
    }
    let mut solutions: Vec<SearchHit> = grouped
        .into_values()
        .map(|mut group| {
            group.sort_by_key(|(t, _)| triple_order_key(t));
            let triples = group.iter().map(|(t, _)| t.clone()).collect();
            let solution = group.swap_remove(0).1;
            SearchHit { solution, triples }
        })
        .collect();
    solutions.sort_by(|x, y| {
        (x.pair().perimeter(), x.pair().roots1()).cmp(&(y.pair().perimeter(), y.pair().roots1()))
    });

    for hit in &solutions {
        assert!(hit.solution.verify(), "search hit at {} failed re-verification", hit.solution.triple());
    }

    let mut special_flags = merged.special;
    special_flags.sort_by_key(triple_order_key);

    SearchReport {
        bound,
        triples_scanned: merged.scanned,
        square_candidates: merged.candidates,
        rejections: merged.rejections,
        solutions,
        special_flags,
        elapsed: started.elapsed(),
    }
}
