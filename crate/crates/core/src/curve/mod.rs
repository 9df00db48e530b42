//! Elliptic-curve side of the construction: the quartic family in `(m, x, y)`,
//! the Weierstrass model of its `m = 13/25` member, the birational maps
//! between them, and generation of new pairs by walking the lattice
//! `P + k·G1 + j·G2`.

mod birational;
mod constants;
mod generate;
mod quartic;
mod weierstrass;

use thiserror::Error;

pub use birational::{to_quartic, to_weierstrass};
pub use constants::{CurveConstants, CurveLab, Orientation};
pub use generate::{generate_pairs, spiral_order, GeneratedPair, GenerationReport, SkipReason, SkippedPoint};
pub use quartic::{pqr_from_quartic_point, quartic_coeffs, QuarticCoeffs, QuarticPoint};
pub use weierstrass::{Point, WeierstrassCurve};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("point lies on the exceptional locus of the birational map")]
    ExceptionalLocus,
    #[error("the point at infinity has no image on the quartic")]
    PointAtInfinity,
    #[error("quartic point has x = 0, which gives r = 0")]
    ZeroAbscissa,
    #[error("curve discriminant vanishes")]
    SingularCurve,
    #[error("constant {0} fails its self-check")]
    SelfCheck(&'static str),
}
