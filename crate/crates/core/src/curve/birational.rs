//! Birational maps between the `m = 13/25` quartic and its Weierstrass model.

use super::weierstrass::Point;
use super::quartic::QuarticPoint;
use super::CurveError;
use crate::scalar::{Field, Scalar};

fn c<F: Scalar>(digits: &str) -> F {
    F::dec(digits)
}

/// Quartic `(x, y)` to Weierstrass `(X, Y)`; undefined where `577x = 2825`.
pub fn to_weierstrass<F: Field>(pt: &QuarticPoint<F>) -> Result<Point<F>, CurveError> {
    let (x, y) = (pt.x.clone(), pt.y.clone());
    let den = c::<F>("577") * x.clone() - c("2825");
    if den.is_zero() {
        return Err(CurveError::ExceptionalLocus);
    }
    let x2 = x.clone() * x.clone();
    let x3 = x2.clone() * x.clone();
    let den2 = den.clone() * den.clone();
    let den3 = den2.clone() * den;

    let big_x = c::<F>("4")
        * (c::<F>("1311254697763") * x2.clone() + c::<F>("2523717076250") * x.clone()
            + c::<F>("1621155375000") * y.clone()
            - c("3370847328125"))
        / den2;
    let big_y = c::<F>("60734016")
        * (c::<F>("223993723304") * x3 + c::<F>("1368674740750") * x2
            + c::<F>("364901515625") * x.clone() * y.clone()
            - c::<F>("2217844262500") * x
            + c::<F>("133349609375") * y
            - c("372517031250"))
        / den3;
    Ok(Point::affine(big_x, big_y))
}

/// Weierstrass `(X, Y)` to quartic `(x, y)`; undefined at infinity and
/// where `140122182X - 23657Y = 532179246194760`.
pub fn to_quartic<F: Field>(pt: &Point<F>) -> Result<QuarticPoint<F>, CurveError> {
    let (big_x, big_y) = match pt {
        Point::Infinity => return Err(CurveError::PointAtInfinity),
        Point::Affine { x, y } => (x.clone(), y.clone()),
    };
    let den = c::<F>("140122182") * big_x.clone() - c::<F>("23657") * big_y.clone()
        - c("532179246194760");
    if den.is_zero() {
        return Err(CurveError::ExceptionalLocus);
    }
    let x = -(c::<F>("25")
        * (c::<F>("2048250") * big_x.clone() + c::<F>("4633") * big_y.clone() - c("1188723263160")))
        / den.clone();
    let big_x2 = big_x.clone() * big_x.clone();
    let five_den = c::<F>("5") * den;
    let y = c::<F>("5061168")
        * (c::<F>("137842") * big_x2.clone() * big_x - c::<F>("739070924100") * big_x2
            - c::<F>("68921") * big_y.clone() * big_y.clone()
            - c::<F>("182461764476160") * big_y
            + c("3026923795437314317841600"))
        / (five_den.clone() * five_den);
    Ok(QuarticPoint::new(x, y))
}
