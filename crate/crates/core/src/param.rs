//! The two-parameter family of candidate pairs.
//!
//! Root sides are taken as
//!
//! ```text
//! a = pu + q + r,  b = qu - p - r,  c = ru - p + q,
//! d = pu - q - r,  e = qu + p + r,  f = ru + p - q,
//! ```
//!
//! which makes the perimeters agree identically. The areas then agree iff
//! `A(p,q,r)·u² + B(p,q,r) = 0` (barring trivial factors), so a rational `u`
//! exists iff `-A·B` is a rational square `t²`.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::arith::rational_square_root;
use crate::scalar::Scalar;
use crate::triangle::{canonicalize, CanonRejection, Sextuple, TrianglePair};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamTriple<S> {
    pub p: S,
    pub q: S,
    pub r: S,
}

impl<S> ParamTriple<S> {
    pub fn new(p: S, q: S, r: S) -> Self {
        Self { p, q, r }
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> ParamTriple<T> {
        ParamTriple {
            p: f(&self.p),
            q: f(&self.q),
            r: f(&self.r),
        }
    }
}

impl<S: Scalar> ParamTriple<S> {
    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero() && self.r.is_zero()
    }

    pub fn scaled(&self, factor: &S) -> Self {
        Self::new(
            self.p.clone() * factor.clone(),
            self.q.clone() * factor.clone(),
            self.r.clone() * factor.clone(),
        )
    }

    /// `|p| + |q| + |r|`
    pub fn l1_norm(&self) -> S {
        self.p.abs() + self.q.abs() + self.r.abs()
    }
}

impl<S: fmt::Display> fmt::Display for ParamTriple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.p, self.q, self.r)
    }
}

impl<S: fmt::Display> Serialize for ParamTriple<S> {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        let mut st = serializer.serialize_struct("ParamTriple", 3)?;
        st.serialize_field("p", &self.p.to_string())?;
        st.serialize_field("q", &self.q.to_string())?;
        st.serialize_field("r", &self.r.to_string())?;
        st.end()
    }
}

pub fn substitute<S: Scalar>(p: &S, q: &S, r: &S, u: &S) -> Sextuple<S> {
    let (p, q, r, u) = (p.clone(), q.clone(), r.clone(), u.clone());
    let pu = p.clone() * u.clone();
    let qu = q.clone() * u.clone();
    let ru = r.clone() * u;
    Sextuple::new(
        pu.clone() + q.clone() + r.clone(),
        qu.clone() - p.clone() - r.clone(),
        ru.clone() - p.clone() + q.clone(),
        pu - q.clone() - r.clone(),
        qu + p.clone() + r.clone(),
        ru + p - q,
    )
}

/// Coefficient of `u²` in the area residual.
pub fn factor_a<S: Scalar>(p: &S, q: &S, r: &S) -> S {
    let (p2, q2, r2) = (p.clone() * p.clone(), q.clone() * q.clone(), r.clone() * r.clone());
    let pqr = p.clone() * q.clone() * r.clone();
    p2.clone() * p.clone() + p2.clone() * q.clone() - p2 * r.clone() + p.clone() * q2.clone()
        - S::lit(2) * pqr
        + p.clone() * r2.clone()
        + q2.clone() * q.clone()
        - q2 * r.clone()
        + q.clone() * r2.clone()
        - r2 * r.clone()
}

/// Constant term of the area residual.
pub fn factor_b<S: Scalar>(p: &S, q: &S, r: &S) -> S {
    let (p2, q2, r2) = (p.clone() * p.clone(), q.clone() * q.clone(), r.clone() * r.clone());
    let pqr = p.clone() * q.clone() * r.clone();
    S::lit(2)
        * (p2.clone() * q.clone() - p2 * r.clone() + p.clone() * q2.clone()
            + S::lit(6) * pqr
            + p.clone() * r2.clone()
            - q2 * r.clone()
            + q.clone() * r2)
}

/// The `u`-independent part of the triviality test: one of
/// `q+r`, `p+r`, `p-q`, `p+q-r` vanishes.
pub fn has_trivial_factor<S: Scalar>(p: &S, q: &S, r: &S) -> bool {
    let (p, q, r) = (p.clone(), q.clone(), r.clone());
    (q.clone() + r.clone()).is_zero()
        || (p.clone() + r.clone()).is_zero()
        || (p.clone() - q.clone()).is_zero()
        || (p + q - r).is_zero()
}

/// `u(u-1)(u+1)(q+r)(p+r)(p-q)(p+q-r) = 0`
pub fn is_trivial<S: Scalar>(p: &S, q: &S, r: &S, u: &S) -> bool {
    u.is_zero() || u.abs().is_one() || has_trivial_factor(p, q, r)
}

/// How [`solve_u`] fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveFailure {
    /// `A = 0`. When `B = 0` as well the residual vanishes for every `u`.
    ANotInvertible { residual_vanishes: bool },
    NotASquare,
}

/// Solves `A·u² + B = 0`, returning `(t, u)` with `t = √(-A·B) ≥ 0` and
/// `u = -t/A`.
pub fn solve_u(triple: &ParamTriple<Rational>) -> Result<(Rational, Rational), SolveFailure> {
    let ParamTriple { p, q, r } = triple;
    let a = factor_a(p, q, r);
    let b = factor_b(p, q, r);
    if a.is_zero() {
        return Err(SolveFailure::ANotInvertible {
            residual_vanishes: b.is_zero(),
        });
    }
    let t = rational_square_root(&-(&a * &b)).ok_or(SolveFailure::NotASquare)?;
    let u = -&t / &a;
    assert!((&a * &u * &u + &b).is_zero(), "u = {u} does not solve the residual at {triple}");
    Ok((t, u))
}

/// Reason a `(p, q, r)` triple does not yield a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RejectionReason {
    ZeroTriple,
    TrivialCondition,
    ANotInvertible,
    NotASquare,
    DegenerateSide,
    TriangleInequalityFails,
    CongruentTriangles,
}

impl fmt::Display for RejectionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<SolveFailure> for RejectionReason {
    fn from(f: SolveFailure) -> Self {
        match f {
            SolveFailure::ANotInvertible { .. } => RejectionReason::ANotInvertible,
            SolveFailure::NotASquare => RejectionReason::NotASquare,
        }
    }
}

impl From<CanonRejection> for RejectionReason {
    fn from(c: CanonRejection) -> Self {
        match c {
            CanonRejection::DegenerateSide => RejectionReason::DegenerateSide,
            CanonRejection::TriangleInequalityFails => RejectionReason::TriangleInequalityFails,
            CanonRejection::CongruentTriangles => RejectionReason::CongruentTriangles,
            CanonRejection::NotEquiareal => {
                unreachable!("the parametric family has equal perimeter and area once u solves the residual")
            }
        }
    }
}

/// A triple together with the `t`, `u` and canonical pair it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSolution {
    triple: ParamTriple<Rational>,
    t: Rational,
    u: Rational,
    sextuple: Sextuple<Rational>,
    pair: TrianglePair,
}

impl ParamSolution {
    pub fn triple(&self) -> &ParamTriple<Rational> {
        &self.triple
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    /// Root sides before scaling to integers.
    pub fn sextuple(&self) -> &Sextuple<Rational> {
        &self.sextuple
    }

    pub fn pair(&self) -> &TrianglePair {
        &self.pair
    }

    pub fn into_pair(self) -> TrianglePair {
        self.pair
    }

    /// Re-derives every field from the triple and compares.
    pub fn verify(&self) -> bool {
        let ParamTriple { p, q, r } = &self.triple;
        let a = factor_a(p, q, r);
        let b = factor_b(p, q, r);
        !self.t.is_negative()
            && &self.t * &self.t == -(&a * &b)
            && (&a * &self.u * &self.u + &b).is_zero()
            && !is_trivial(p, q, r, &self.u)
            && pair_from_pqr(&self.triple).as_ref() == Ok(self)
    }
}

impl Serialize for ParamSolution {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ParamSolution", 4)?;
        st.serialize_field("triple", &self.triple)?;
        st.serialize_field("t", &self.t.to_string())?;
        st.serialize_field("u", &self.u.to_string())?;
        st.serialize_field("pair", &self.pair)?;
        st.end()
    }
}

/// Full pipeline from `(p, q, r)` to a canonical pair.
///
/// Checks run cheapest first: the zero triple, the `u`-independent trivial
/// factors, then `A`, the square test, the `u` factors, and finally
/// canonicalization.
pub fn pair_from_pqr(triple: &ParamTriple<Rational>) -> Result<ParamSolution, RejectionReason> {
    if triple.is_zero() {
        return Err(RejectionReason::ZeroTriple);
    }
    let ParamTriple { p, q, r } = triple;
    if has_trivial_factor(p, q, r) {
        return Err(RejectionReason::TrivialCondition);
    }
    let (t, u) = solve_u(triple)?;
    if is_trivial(p, q, r, &u) {
        return Err(RejectionReason::TrivialCondition);
    }
    let sextuple = substitute(p, q, r, &u);
    let pair = canonicalize(&sextuple)?;
    Ok(ParamSolution {
        triple: triple.clone(),
        t,
        u,
        sextuple,
        pair,
    })
}
