use super::birational::to_weierstrass;
use super::quartic::{quartic_coeffs, QuarticCoeffs, QuarticPoint};
use super::weierstrass::{Point, WeierstrassCurve};
use super::CurveError;
use crate::{CurvePoint, Rational};

fn rat(num: &str, den: &str) -> Rational {
    Rational::new(num.parse().expect("integer literal"), den.parse().expect("integer literal"))
}

/// The curve, its base point, generators and the matching quartic data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveConstants {
    pub curve: WeierstrassCurve<Rational>,
    /// Image of the known quartic point; corresponds to `(14, -27, -25)`.
    pub base: CurvePoint,
    pub g1: CurvePoint,
    pub g2: CurvePoint,
    pub m: Rational,
    pub known_quartic: QuarticPoint<Rational>,
}

impl CurveConstants {
    pub fn published() -> Self {
        let int = |s: &str| rat(s, "1");
        CurveConstants {
            curve: WeierstrassCurve::new(int("-21151030877616"), int("31685265497576201600")),
            base: Point::affine(
                rat("-7450305309428", "4661281"),
                rat("-78862809542759294976", "10063705679"),
            ),
            g1: Point::affine(rat("6008706700", "1681"), rat("91230882238080", "68921")),
            g2: Point::affine(
                rat("7840706250956", "1168561"),
                rat("-17496345598032878080", "1263214441"),
            ),
            m: rat("13", "25"),
            known_quartic: QuarticPoint::new(rat("-25", "14"), rat("-339", "245")),
        }
    }
}

/// Whether the quartic-to-Weierstrass map sends the known quartic point to
/// the base point itself or to its negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Orientation {
    Direct,
    Negated,
}

/// Validated curve constants. Construction runs every self-check, so a lab
/// can only exist for consistent data.
#[derive(Debug, Clone)]
pub struct CurveLab {
    constants: CurveConstants,
    quartic: QuarticCoeffs<Rational>,
    orientation: Orientation,
}

impl CurveLab {
    pub fn new(constants: CurveConstants) -> Result<Self, CurveError> {
        let curve = &constants.curve;
        if curve.is_singular() {
            return Err(CurveError::SingularCurve);
        }
        for (name, pt) in [("P", &constants.base), ("G1", &constants.g1), ("G2", &constants.g2)] {
            if pt.is_infinity() || !curve.contains(pt) {
                return Err(CurveError::SelfCheck(name));
            }
        }
        let quartic = quartic_coeffs(&constants.m);
        if !quartic.contains(&constants.known_quartic) {
            return Err(CurveError::SelfCheck("known quartic point"));
        }
        let image = to_weierstrass(&constants.known_quartic)?;
        let orientation = if image == constants.base {
            Orientation::Direct
        } else if image == curve.neg(&constants.base) {
            Orientation::Negated
        } else {
            return Err(CurveError::SelfCheck("image of the known quartic point"));
        };
        Ok(CurveLab {
            constants,
            quartic,
            orientation,
        })
    }

    pub fn published() -> Self {
        Self::new(CurveConstants::published()).expect("published constants pass their self-checks")
    }

    pub fn constants(&self) -> &CurveConstants {
        &self.constants
    }

    pub fn curve(&self) -> &WeierstrassCurve<Rational> {
        &self.constants.curve
    }

    pub fn quartic(&self) -> &QuarticCoeffs<Rational> {
        &self.quartic
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Base point with the Y-sign matching the image of the known quartic point.
    pub fn base(&self) -> CurvePoint {
        match self.orientation {
            Orientation::Direct => self.constants.base.clone(),
            Orientation::Negated => self.curve().neg(&self.constants.base),
        }
    }
}
