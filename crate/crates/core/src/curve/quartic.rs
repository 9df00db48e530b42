use std::fmt;

use num_traits::Zero;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::CurveError;
use crate::arith::common_denominator;
use crate::param::ParamTriple;
use crate::scalar::Scalar;
use crate::Rational;

/// `y² = c4·x⁴ + c3·x³ + c2·x² + c1·x + c0` for a fixed `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticCoeffs<S> {
    pub m: S,
    pub c4: S,
    pub c3: S,
    pub c2: S,
    pub c1: S,
    pub c0: S,
}

/// Coefficients of the quartic obtained from the square condition after
/// `q = -p(1 - m·x)`, `r = p·x`, `t = p³·x·y`.
pub fn quartic_coeffs<S: Scalar>(m: &S) -> QuarticCoeffs<S> {
    let l = S::lit;
    let m = m.clone();
    let m2 = m.clone() * m.clone();
    let m3 = m2.clone() * m.clone();
    let m4 = m3.clone() * m.clone();
    let m_minus_1 = m.clone() - S::one();
    QuarticCoeffs {
        c4: l(2) * m_minus_1.clone() * m_minus_1.clone() * (m2.clone() + S::one()) * m.clone(),
        c3: -(l(2) * m.clone() * m_minus_1 * (m3.clone() + l(10) * m2.clone() + m.clone() + l(8))),
        c2: l(6) * m4 + l(50) * m3 - l(18) * m2.clone() + l(14) * m.clone() - l(16),
        c1: -(l(8) * m2 * (m.clone() + l(8))),
        c0: l(4) * m.clone() * (m.clone() + l(8)),
        m,
    }
}

impl<S: Scalar> QuarticCoeffs<S> {
    /// Right-hand side at `x`, by Horner.
    pub fn eval(&self, x: &S) -> S {
        [&self.c3, &self.c2, &self.c1, &self.c0]
            .into_iter()
            .fold(self.c4.clone(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn contains(&self, pt: &QuarticPoint<S>) -> bool {
        pt.y.clone() * pt.y.clone() == self.eval(&pt.x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuarticPoint<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> QuarticPoint<S> {
    pub fn new(x: S, y: S) -> Self {
        Self { x, y }
    }

    pub fn negate_y(&self) -> Self {
        Self::new(self.x.clone(), -self.y.clone())
    }
}

impl<S: fmt::Display> fmt::Display for QuarticPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<S: fmt::Display> Serialize for QuarticPoint<S> {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        let mut st = serializer.serialize_struct("QuarticPoint", 2)?;
        st.serialize_field("x", &self.x.to_string())?;
        st.serialize_field("y", &self.y.to_string())?;
        st.end()
    }
}

/// Recovers integer `(p, q, r)` and `t` from a point on the quartic.
///
/// `p` is the least positive integer making `r = p·x` and
/// `q = -p(1 - m·x)` integral; the canonical pair does not depend on it.
pub fn pqr_from_quartic_point(
    pt: &QuarticPoint<Rational>,
    m: &Rational,
) -> Result<(ParamTriple<Rational>, Rational), CurveError> {
    if pt.x.is_zero() {
        return Err(CurveError::ZeroAbscissa);
    }
    let mx = m * &pt.x;
    let p = Rational::from_integer(common_denominator([&pt.x, &mx]));
    let r = &p * &pt.x;
    let q = -(&p * (Rational::from_integer(1.into()) - mx));
    let t = &p * &p * &p * &pt.x * &pt.y;
    Ok((ParamTriple::new(p, q, r), t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{factor_a, factor_b};
    use crate::Integer;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(Integer::from(n), Integer::from(d))
    }

    #[test]
    fn coefficients_at_thirteen_over_twenty_five() {
        let qc = quartic_coeffs(&rat(13, 25));
        assert_eq!(qc.c4, rat(2972736, 9765625));
        assert_eq!(qc.c3, rat(55402464, 9765625));
        assert_eq!(qc.c2, rat(-2389884, 390625));
        assert_eq!(qc.c1, rat(-287976, 15625));
        assert_eq!(qc.c0, rat(11076, 625));
    }

    #[test]
    fn coefficients_at_small_m() {
        let one = quartic_coeffs(&1i64);
        assert_eq!((one.c4, one.c3, one.c2, one.c1, one.c0), (0, 0, 36, -72, 36));
        let zero = quartic_coeffs(&0i64);
        assert_eq!((zero.c4, zero.c3, zero.c2, zero.c1, zero.c0), (0, 0, -16, 0, 0));
    }

    #[test]
    fn membership() {
        let qc = quartic_coeffs(&rat(13, 25));
        let pt = QuarticPoint::new(rat(-25, 14), rat(-339, 245));
        assert!(qc.contains(&pt));
        assert!(qc.contains(&pt.negate_y()));
        assert!(!qc.contains(&QuarticPoint::new(rat(0, 1), rat(1, 1))));
    }

    #[test]
    fn triple_from_known_point() {
        let m = rat(13, 25);
        let pt = QuarticPoint::new(rat(-25, 14), rat(-339, 245));
        let (triple, t) = pqr_from_quartic_point(&pt, &m).unwrap();
        assert_eq!(triple, ParamTriple::new(rat(14, 1), rat(-27, 1), rat(-25, 1)));
        assert_eq!(t, rat(6780, 1));
        let (triple_neg, t_neg) = pqr_from_quartic_point(&pt.negate_y(), &m).unwrap();
        assert_eq!(triple_neg, triple);
        assert_eq!(t_neg, -t.clone());
        let a = factor_a(&triple.p, &triple.q, &triple.r);
        let b = factor_b(&triple.p, &triple.q, &triple.r);
        assert_eq!(&t * &t, -(a * b));
    }

    #[test]
    fn zero_abscissa_rejected() {
        let pt = QuarticPoint::new(rat(0, 1), rat(1, 1));
        assert_eq!(pqr_from_quartic_point(&pt, &rat(13, 25)), Err(CurveError::ZeroAbscissa));
    }
}
