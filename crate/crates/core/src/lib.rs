//! Exact-arithmetic toolkit for pairs of triangles whose sides are perfect
//! squares of integers and which share a common perimeter and a common area.
//!
//! The algebra (Heron products, the parametric family, the quartic model and
//! the Weierstrass group law) is written once over a [`Scalar`] or [`Field`]
//! type. Everything that has to be exact in practice is instantiated at
//! [`Rational`], an arbitrary-precision reduced fraction; the brute-force
//! search evaluates its hot filter over machine `i128` before confirming
//! candidates exactly.

pub mod arith;
pub mod curve;
pub mod param;
pub mod published;
pub mod scalar;
pub mod search;
pub mod serde_dec;
pub mod triangle;

pub use scalar::{Field, Scalar};

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Six rational root sides `(a, b, c, d, e, f)`.
pub type Sextuple = triangle::Sextuple<Rational>;
/// Rational `(p, q, r)` parameters.
pub type ParamTriple = param::ParamTriple<Rational>;
/// Rational quartic coefficients.
pub type QuarticCoeffs = curve::QuarticCoeffs<Rational>;
/// Rational point on the quartic model.
pub type QuarticPoint = curve::QuarticPoint<Rational>;
/// Short Weierstrass curve with rational coefficients.
pub type WeierstrassCurve = curve::WeierstrassCurve<Rational>;
/// Rational point on a Weierstrass curve (or the point at infinity).
pub type CurvePoint = curve::Point<Rational>;

pub use curve::{CurveConstants, CurveError, CurveLab};
pub use param::{pair_from_pqr, ParamSolution, RejectionReason};
pub use search::{search, SearchReport};
pub use triangle::{canonicalize, TrianglePair};
