//! Command implementations behind the `equiareal` binary.
//!
//! Every command produces a record wrapped in an [`Envelope`]; `main.rs`
//! only parses flags, picks the output stream and maps outcomes to exit
//! codes (0 success, 1 domain rejection or failed check, 2 usage error,
//! 3 I/O failure).

use std::fmt::Write as _;

use equiareal::curve::{generate_pairs, to_quartic, GeneratedPair, GenerationReport, Orientation, SkippedPoint};
use equiareal::param::{pair_from_pqr, ParamSolution, ParamTriple, RejectionReason};
use equiareal::published::{self, PublishedPair};
use equiareal::search::{search, SearchHit, SearchReport};
use equiareal::triangle::{PairInvariantError, TrianglePair};
use equiareal::{CurveConstants, CurveError, CurveLab, Rational};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Environment variable holding the default worker count for `search`.
pub const WORKERS_ENV: &str = "EQUIAREAL_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Structured,
    Text,
}

#[derive(Debug, Serialize)]
pub struct Envelope<T> {
    pub schema_version: u32,
    pub command: &'static str,
    pub result: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &'static str, result: T) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION,
            command,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("records serialize");
        s.push('\n');
        s
    }
}

/// Rechecks a pair right before it is written out.
pub fn revalidate<'a>(pairs: impl IntoIterator<Item = &'a TrianglePair>) -> Result<(), PairInvariantError> {
    pairs.into_iter().try_for_each(TrianglePair::check_invariants)
}

// ---------------------------------------------------------------- verify

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            EXIT_OK
        } else {
            EXIT_REJECTED
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{mark}] {}: {}", c.name, c.detail);
        }
        let _ = writeln!(out, "overall: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

fn check_published(known: &PublishedPair) -> Check {
    let name = match known.label {
        "first" => "first published pair",
        _ => "second published pair",
    };
    match pair_from_pqr(&known.param_triple()) {
        Ok(sol) => {
            let pair = sol.pair();
            let pass = known.matches(pair) && pair.check_invariants().is_ok() && !pair.area_is_integer();
            Check {
                name,
                pass,
                detail: format!(
                    "{} -> {pair}; perimeter {}; 16·area² {}; integer area: {}",
                    sol.triple(),
                    pair.perimeter(),
                    pair.sixteen_area_sq(),
                    pair.area_is_integer()
                ),
            }
        }
        Err(reason) => Check {
            name,
            pass: false,
            detail: format!("rejected: {reason}"),
        },
    }
}

/// Runs every consistency check on the given constants.
pub fn cmd_verify(constants: &CurveConstants) -> VerifyReport {
    let mut checks = vec![check_published(&published::FIRST), check_published(&published::SECOND)];

    let curve = &constants.curve;
    for (name, pt) in [
        ("P on curve", &constants.base),
        ("G1 on curve", &constants.g1),
        ("G2 on curve", &constants.g2),
    ] {
        checks.push(Check {
            name,
            pass: !pt.is_infinity() && curve.contains(pt),
            detail: format!("{pt}"),
        });
    }
    checks.push(Check {
        name: "curve nonsingular",
        pass: !curve.is_singular(),
        detail: format!("discriminant {}", curve.discriminant()),
    });

    let expected = [
        ("2972736", "9765625"),
        ("55402464", "9765625"),
        ("-2389884", "390625"),
        ("-287976", "15625"),
        ("11076", "625"),
    ]
    .map(|(n, d)| Rational::new(n.parse().unwrap(), d.parse().unwrap()));
    let qc = equiareal::curve::quartic_coeffs(&Rational::new(13.into(), 25.into()));
    let got = [&qc.c4, &qc.c3, &qc.c2, &qc.c1, &qc.c0];
    checks.push(Check {
        name: "quartic coefficients at m = 13/25",
        pass: got.iter().zip(&expected).all(|(a, b)| *a == b),
        detail: got.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
    });
    let on_quartic = equiareal::curve::quartic_coeffs(&constants.m).contains(&constants.known_quartic);
    checks.push(Check {
        name: "known quartic point",
        pass: on_quartic,
        detail: format!("{} at m = {}", constants.known_quartic, constants.m),
    });

    let lab = CurveLab::new(constants.clone());
    checks.push(match &lab {
        Ok(lab) => {
            let base = lab.base();
            let back = to_quartic(&base);
            let pass = back.as_ref() == Ok(&constants.known_quartic);
            Check {
                name: "birational roundtrip on P",
                pass,
                detail: format!(
                    "map orientation {:?}; P -> {}",
                    lab.orientation(),
                    back.map(|q| q.to_string()).unwrap_or_else(|e| e.to_string())
                ),
            }
        }
        Err(e) => Check {
            name: "birational roundtrip on P",
            pass: false,
            detail: format!("self-check failed: {e}"),
        },
    });
    checks.push(match &lab {
        Ok(lab) => {
            let report = generate_pairs(lab, 0, 0);
            let pass = report.pairs.len() == 1 && published::FIRST.matches(report.pairs[0].pair());
            Check {
                name: "lattice origin yields first pair",
                pass,
                detail: report
                    .pairs
                    .first()
                    .map(|g| g.pair().to_string())
                    .unwrap_or_else(|| "no pair".to_owned()),
            }
        }
        Err(e) => Check {
            name: "lattice origin yields first pair",
            pass: false,
            detail: format!("self-check failed: {e}"),
        },
    });

    let pass = checks.iter().all(|c| c.pass);
    VerifyReport { pass, checks }
}

// ---------------------------------------------------------------- pair

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PairOutcome {
    Solution {
        published: Option<&'static str>,
        solution: Box<ParamSolution>,
    },
    Rejected {
        triple: ParamTriple<Rational>,
        reason: RejectionReason,
    },
}

impl PairOutcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            PairOutcome::Solution { .. } => EXIT_OK,
            PairOutcome::Rejected { .. } => EXIT_REJECTED,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            PairOutcome::Solution { solution, .. } => {
                let pair = solution.pair();
                format!(
                    "{} -> t = {}, u = {}\n{pair}\nperimeter {}\n16·area² {}\ninteger area: {}\n",
                    solution.triple(),
                    solution.t(),
                    solution.u(),
                    pair.perimeter(),
                    pair.sixteen_area_sq(),
                    pair.area_is_integer()
                )
            }
            PairOutcome::Rejected { triple, reason } => format!("{triple} rejected: {reason}\n"),
        }
    }
}

pub fn cmd_pair(p: Rational, q: Rational, r: Rational) -> PairOutcome {
    let triple = ParamTriple::new(p, q, r);
    match pair_from_pqr(&triple) {
        Ok(solution) => PairOutcome::Solution {
            published: published::identify(solution.pair()),
            solution: Box::new(solution),
        },
        Err(reason) => PairOutcome::Rejected { triple, reason },
    }
}

// ---------------------------------------------------------------- search

#[derive(Debug, Serialize)]
pub struct SearchOutput<'a> {
    #[serde(flatten)]
    pub report: &'a SearchReport,
    /// Pairs found beyond the published ones.
    pub discrepancies: Vec<&'a SearchHit>,
}

pub fn cmd_search(bound: u64, workers: usize) -> SearchReport {
    search(bound, workers)
}

pub fn search_output(report: &SearchReport) -> SearchOutput<'_> {
    SearchOutput {
        report,
        discrepancies: report.discrepancies().collect(),
    }
}

pub fn search_summary(report: &SearchReport) -> String {
    let mut out = String::new();
    for hit in &report.solutions {
        let tag = hit.published_label().unwrap_or("NEW");
        let _ = writeln!(out, "[{tag}] {} at {} (perimeter {})", hit.pair(), hit.solution.triple(), hit.pair().perimeter());
    }
    let _ = writeln!(
        out,
        "bound {}: {} triples scanned, {} square candidates, {} distinct pairs, {} special triples",
        report.bound,
        report.triples_scanned,
        report.square_candidates,
        report.solutions.len(),
        report.special_flags.len()
    );
    out
}

// ---------------------------------------------------------------- generate

#[derive(Debug, Serialize)]
pub struct GeneratedRecord<'a> {
    pub published: Option<&'static str>,
    #[serde(flatten)]
    pub record: &'a GeneratedPair,
}

#[derive(Debug, Serialize)]
pub struct GenerateOutput<'a> {
    pub k_bound: u32,
    pub j_bound: u32,
    pub orientation: Orientation,
    pub pairs: Vec<GeneratedRecord<'a>>,
    pub skipped: &'a [SkippedPoint],
    /// Emitted pairs whose common area is an integer.
    pub integer_area: Vec<(i64, i64)>,
}

pub fn cmd_generate(constants: CurveConstants, k_bound: u32, j_bound: u32) -> Result<(CurveLab, GenerationReport), CurveError> {
    let lab = CurveLab::new(constants)?;
    let report = generate_pairs(&lab, k_bound, j_bound);
    Ok((lab, report))
}

pub fn generate_output<'a>(lab: &CurveLab, report: &'a GenerationReport) -> GenerateOutput<'a> {
    GenerateOutput {
        k_bound: report.k_bound,
        j_bound: report.j_bound,
        orientation: lab.orientation(),
        pairs: report
            .pairs
            .iter()
            .map(|record| GeneratedRecord {
                published: published::identify(record.pair()),
                record,
            })
            .collect(),
        skipped: &report.skipped,
        integer_area: report
            .pairs
            .iter()
            .filter(|g| g.pair().area_is_integer())
            .map(|g| (g.k, g.j))
            .collect(),
    }
}

pub fn generate_summary(report: &GenerationReport) -> String {
    let mut out = String::new();
    for g in &report.pairs {
        let tag = published::identify(g.pair()).unwrap_or("NEW");
        let digits = g.pair().roots2()[2].to_string().len();
        let _ = writeln!(
            out,
            "[{tag}] (k, j) = ({}, {}): largest root has {digits} digits; integer area: {}",
            g.k,
            g.j,
            g.pair().area_is_integer()
        );
    }
    let _ = writeln!(
        out,
        "{} distinct pairs, {} lattice points skipped",
        report.pairs.len(),
        report.skipped.len()
    );
    out
}
