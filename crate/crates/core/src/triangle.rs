//! Triangles with squared sides: perimeter, Heron product, triangle
//! inequalities, and canonicalization of rational root sides to a primitive
//! integer pair.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{common_denominator, gcd_all, is_integer_square};
use crate::scalar::Scalar;
use crate::{Integer, Rational};

/// Sum of the three sides.
pub fn perimeter<S: Scalar>(sides: &[S; 3]) -> S {
    let [s1, s2, s3] = sides;
    s1.clone() + s2.clone() + s3.clone()
}

/// `(s1+s2+s3)(s1+s2-s3)(s1-s2+s3)(-s1+s2+s3)`, i.e. sixteen times the
/// squared area when the sides form a triangle. Nonpositive otherwise.
pub fn sixteen_area_sq<S: Scalar>(sides: &[S; 3]) -> S {
    perimeter(sides) * reduced_heron_product(sides)
}

/// The Heron product with the perimeter factor removed. Two triangles of
/// equal perimeter have equal area iff these agree.
pub fn reduced_heron_product<S: Scalar>(sides: &[S; 3]) -> S {
    let [s1, s2, s3] = sides;
    (s1.clone() + s2.clone() - s3.clone())
        * (s1.clone() - s2.clone() + s3.clone())
        * (s2.clone() + s3.clone() - s1.clone())
}

/// Strict triangle inequalities with positive sides.
pub fn is_triangle<S: Scalar>(sides: &[S; 3]) -> bool {
    let [s1, s2, s3] = sides;
    let zero = S::zero();
    *s1 > zero
        && *s2 > zero
        && *s3 > zero
        && *s1 < s2.clone() + s3.clone()
        && *s2 < s1.clone() + s3.clone()
        && *s3 < s1.clone() + s2.clone()
}

/// Root sides of two triangles: the first has sides `a², b², c²`, the
/// second `d², e², f²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sextuple<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
    pub e: S,
    pub f: S,
}

impl<S: Scalar> Sextuple<S> {
    pub fn new(a: S, b: S, c: S, d: S, e: S, f: S) -> Self {
        Self { a, b, c, d, e, f }
    }

    pub fn from_array([a, b, c, d, e, f]: [S; 6]) -> Self {
        Self { a, b, c, d, e, f }
    }

    pub fn to_array(&self) -> [S; 6] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
        ]
    }

    pub fn first_roots(&self) -> [S; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn second_roots(&self) -> [S; 3] {
        [self.d.clone(), self.e.clone(), self.f.clone()]
    }

    pub fn first_sides(&self) -> [S; 3] {
        self.first_roots().map(|v| v.clone() * v)
    }

    pub fn second_sides(&self) -> [S; 3] {
        self.second_roots().map(|v| v.clone() * v)
    }

    /// Exchanges the two triangles.
    pub fn swapped(&self) -> Self {
        Self::new(
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
        )
    }

    pub fn scaled(&self, factor: &S) -> Self {
        Self::from_array(self.to_array().map(|v| v * factor.clone()))
    }

    pub fn negated(&self) -> Self {
        Self::from_array(self.to_array().map(|v| -v))
    }
}

impl<S: fmt::Display> fmt::Display for Sextuple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {} | {}, {}, {})",
            self.a, self.b, self.c, self.d, self.e, self.f
        )
    }
}

/// Why a sextuple does not canonicalize to a pair of distinct triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
pub enum CanonRejection {
    #[error("a root side is zero")]
    DegenerateSide,
    #[error("a squared-side triple violates the strict triangle inequality")]
    TriangleInequalityFails,
    #[error("the two triangles are congruent")]
    CongruentTriangles,
    #[error("the triangles differ in perimeter or area")]
    NotEquiareal,
}

/// Invariant breach detected by [`TrianglePair::check_invariants`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairInvariantError {
    #[error("roots are not positive and sorted ascending")]
    NotSortedPositive,
    #[error("the six roots share a common factor {0}")]
    NotPrimitive(Integer),
    #[error("perimeters differ or disagree with the stored value")]
    PerimeterMismatch,
    #[error("Heron products differ or disagree with the stored value")]
    AreaMismatch,
    #[error("a triple fails the strict triangle inequality")]
    NotTriangles,
    #[error("the two triangles are congruent")]
    Congruent,
    #[error("triples are not in lexicographic order")]
    NotOrdered,
    #[error("area integrality flag is wrong")]
    IntegralityFlag,
}

/// Two triangles with squared integer sides, equal perimeter and equal area,
/// stored in canonical form: primitive, positive, sorted within each triple,
/// triples ordered lexicographically.
///
/// Only [`canonicalize`] builds these, so a value always satisfies
/// [`check_invariants`](Self::check_invariants).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TrianglePair {
    roots1: [Integer; 3],
    roots2: [Integer; 3],
    perimeter: Integer,
    sixteen_area_sq: Integer,
    area_is_integer: bool,
}

impl TrianglePair {
    pub fn roots1(&self) -> &[Integer; 3] {
        &self.roots1
    }

    pub fn roots2(&self) -> &[Integer; 3] {
        &self.roots2
    }

    pub fn sides1(&self) -> [Integer; 3] {
        self.roots1.clone().map(|v| &v * &v)
    }

    pub fn sides2(&self) -> [Integer; 3] {
        self.roots2.clone().map(|v| &v * &v)
    }

    pub fn perimeter(&self) -> &Integer {
        &self.perimeter
    }

    pub fn sixteen_area_sq(&self) -> &Integer {
        &self.sixteen_area_sq
    }

    pub fn area_is_integer(&self) -> bool {
        self.area_is_integer
    }

    /// Recomputes every stored property from the roots.
    pub fn check_invariants(&self) -> Result<(), PairInvariantError> {
        let sorted_positive = |t: &[Integer; 3]| t[0].is_positive() && t[0] <= t[1] && t[1] <= t[2];
        if !sorted_positive(&self.roots1) || !sorted_positive(&self.roots2) {
            return Err(PairInvariantError::NotSortedPositive);
        }
        let g = gcd_all(self.roots1.iter().chain(&self.roots2));
        if g != Integer::from(1) {
            return Err(PairInvariantError::NotPrimitive(g));
        }
        let (s1, s2) = (self.sides1(), self.sides2());
        if perimeter(&s1) != self.perimeter || perimeter(&s2) != self.perimeter {
            return Err(PairInvariantError::PerimeterMismatch);
        }
        let (h1, h2) = (sixteen_area_sq(&s1), sixteen_area_sq(&s2));
        if h1 != self.sixteen_area_sq || h2 != self.sixteen_area_sq || !h1.is_positive() {
            return Err(PairInvariantError::AreaMismatch);
        }
        if !is_triangle(&s1) || !is_triangle(&s2) {
            return Err(PairInvariantError::NotTriangles);
        }
        if self.roots1 == self.roots2 {
            return Err(PairInvariantError::Congruent);
        }
        if self.roots1 > self.roots2 {
            return Err(PairInvariantError::NotOrdered);
        }
        if area_is_integer(&self.sixteen_area_sq) != self.area_is_integer {
            return Err(PairInvariantError::IntegralityFlag);
        }
        Ok(())
    }
}

impl fmt::Display for TrianglePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.roots1;
        let [d, e, g] = &self.roots2;
        write!(f, "{a}², {b}², {c}² and {d}², {e}², {g}²")
    }
}

impl Serialize for TrianglePair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings = |vs: &[Integer; 3]| vs.clone().map(|v| v.to_string());
        let mut st = serializer.serialize_struct("TrianglePair", 7)?;
        st.serialize_field("roots1", &strings(&self.roots1))?;
        st.serialize_field("roots2", &strings(&self.roots2))?;
        st.serialize_field("sides1", &strings(&self.sides1()))?;
        st.serialize_field("sides2", &strings(&self.sides2()))?;
        st.serialize_field("perimeter", &self.perimeter.to_string())?;
        st.serialize_field("sixteen_area_sq", &self.sixteen_area_sq.to_string())?;
        st.serialize_field("area_is_integer", &self.area_is_integer)?;
        st.end()
    }
}

fn area_is_integer(sixteen_area_sq: &Integer) -> bool {
    is_integer_square(&Rational::new(sixteen_area_sq.clone(), Integer::from(16)))
}

/// Scales a rational sextuple to primitive positive integers and returns the
/// canonical pair, or the reason it is not a pair of distinct triangles.
pub fn canonicalize(sx: &Sextuple<Rational>) -> Result<TrianglePair, CanonRejection> {
    let entries = sx.to_array();
    if entries.iter().any(Zero::is_zero) {
        return Err(CanonRejection::DegenerateSide);
    }
    let scale = common_denominator(&entries);
    let ints: Vec<Integer> = entries
        .iter()
        .map(|v| (v * &scale).to_integer().abs())
        .collect();
    let g = gcd_all(&ints);
    let mut roots1 = [ints[0].clone(), ints[1].clone(), ints[2].clone()].map(|v| v / &g);
    let mut roots2 = [ints[3].clone(), ints[4].clone(), ints[5].clone()].map(|v| v / &g);
    roots1.sort();
    roots2.sort();

    let sides1 = roots1.clone().map(|v| &v * &v);
    let sides2 = roots2.clone().map(|v| &v * &v);
    if !is_triangle(&sides1) || !is_triangle(&sides2) {
        return Err(CanonRejection::TriangleInequalityFails);
    }
    if roots1 == roots2 {
        return Err(CanonRejection::CongruentTriangles);
    }
    if roots1 > roots2 {
        std::mem::swap(&mut roots1, &mut roots2);
    }
    let sixteen_area_sq = sixteen_area_sq(&sides1);
    if perimeter(&sides1) != perimeter(&sides2) || sixteen_area_sq != self::sixteen_area_sq(&sides2) {
        return Err(CanonRejection::NotEquiareal);
    }
    let pair = TrianglePair {
        perimeter: perimeter(&sides1),
        area_is_integer: area_is_integer(&sixteen_area_sq),
        sixteen_area_sq,
        roots1,
        roots2,
    };
    if let Err(e) = pair.check_invariants() {
        panic!("canonical pair {pair} breaks an invariant: {e}");
    }
    Ok(pair)
}
