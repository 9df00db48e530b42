use std::fmt;

use num_traits::Signed;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::scalar::Field;
use crate::Integer;

/// `Y² = X³ + a4·X + a6`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassCurve<F> {
    pub a4: F,
    pub a6: F,
}

/// Affine point or the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point<F> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F> Point<F> {
    pub fn affine(x: F, y: F) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

impl<F: fmt::Display> fmt::Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => f.write_str("O"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl<F: fmt::Display> Serialize for Point<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Point::Infinity => serializer.serialize_str("infinity"),
            Point::Affine { x, y } => {
                let mut st = serializer.serialize_struct("CurvePoint", 2)?;
                st.serialize_field("X", &x.to_string())?;
                st.serialize_field("Y", &y.to_string())?;
                st.end()
            }
        }
    }
}

impl<F: Field> WeierstrassCurve<F> {
    pub fn new(a4: F, a6: F) -> Self {
        Self { a4, a6 }
    }

    /// `-16(4·a4³ + 27·a6²)`
    pub fn discriminant(&self) -> F {
        let a4_cubed = self.a4.clone() * self.a4.clone() * self.a4.clone();
        let a6_sq = self.a6.clone() * self.a6.clone();
        -(F::lit(16) * (F::lit(4) * a4_cubed + F::lit(27) * a6_sq))
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    fn rhs(&self, x: &F) -> F {
        x.clone() * x.clone() * x.clone() + self.a4.clone() * x.clone() + self.a6.clone()
    }

    pub fn contains(&self, pt: &Point<F>) -> bool {
        match pt {
            Point::Infinity => true,
            Point::Affine { x, y } => y.clone() * y.clone() == self.rhs(x),
        }
    }

    pub fn neg(&self, pt: &Point<F>) -> Point<F> {
        match pt {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::affine(x.clone(), -y.clone()),
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, lhs: &Point<F>, rhs: &Point<F>) -> Point<F> {
        let (x1, y1, x2, y2) = match (lhs, rhs) {
            (Point::Infinity, _) => return rhs.clone(),
            (_, Point::Infinity) => return lhs.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if (y1.clone() + y2.clone()).is_zero() {
                return Point::Infinity;
            }
            (F::lit(3) * x1.clone() * x1.clone() + self.a4.clone()) / (F::lit(2) * y1.clone())
        } else {
            (y2.clone() - y1.clone()) / (x2.clone() - x1.clone())
        };
        let x3 = slope.clone() * slope.clone() - x1.clone() - x2.clone();
        let y3 = slope * (x1.clone() - x3.clone()) - y1.clone();
        Point::affine(x3, y3)
    }

    pub fn double(&self, pt: &Point<F>) -> Point<F> {
        self.add(pt, pt)
    }

    /// `k·pt` by double-and-add over the bits of `|k|`.
    pub fn mul(&self, k: &Integer, pt: &Point<F>) -> Point<F> {
        let base = if k.is_negative() { self.neg(pt) } else { pt.clone() };
        let magnitude = k.magnitude();
        let mut acc = Point::Infinity;
        for i in (0..magnitude.bits()).rev() {
            acc = self.double(&acc);
            if magnitude.bit(i) {
                acc = self.add(&acc, &base);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    // y² = x³ - 2 has the point (3, 5) of infinite order.
    fn small() -> (WeierstrassCurve<Q>, Point<Q>) {
        (WeierstrassCurve::new(q(0), q(-2)), Point::affine(q(3), q(5)))
    }

    #[test]
    fn identity_and_inverse() {
        let (e, g) = small();
        assert_eq!(e.add(&g, &Point::Infinity), g);
        assert_eq!(e.add(&Point::Infinity, &g), g);
        assert_eq!(e.add(&g, &e.neg(&g)), Point::Infinity);
        assert!(e.contains(&Point::Infinity));
    }

    #[test]
    fn doubling_matches_hand_computation() {
        // slope 27/10: x = 729/100 - 6 = 129/100, y = 27/10·(3 - 129/100) - 5 = -383/1000
        let (e, g) = small();
        let two_g = e.double(&g);
        assert_eq!(two_g, Point::affine(Q::new(129, 100), Q::new(-383, 1000)));
        assert!(e.contains(&two_g));
        assert_eq!(e.mul(&Integer::from(2), &g), two_g);
        assert_eq!(e.mul(&Integer::from(-2), &g), e.neg(&two_g));
        assert_eq!(e.mul(&Integer::from(0), &g), Point::Infinity);
    }

    #[test]
    fn two_torsion_doubles_to_infinity() {
        // y² = x³ - x has (0, 0) of order 2.
        let e = WeierstrassCurve::new(q(-1), q(0));
        let t = Point::affine(q(0), q(0));
        assert_eq!(e.double(&t), Point::Infinity);
    }

    #[test]
    fn discriminant_detects_singularity() {
        // y² = x³ - 3x + 2 = (x - 1)²(x + 2)
        assert!(WeierstrassCurve::new(q(-3), q(2)).is_singular());
        assert!(!small().0.is_singular());
    }
}
