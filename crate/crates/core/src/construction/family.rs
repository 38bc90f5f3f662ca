use num_traits::Signed;

use super::{klm_from_pqr, pqrs, quartic_from, QuarticPoint, WeierstrassReduction};
use crate::curves::CurvePoint;
use crate::error::{Error, Result};
use crate::{Cubic, Point, Quartic, Rational};

/// One curve `E_j` of the family with its five consecutive-cube points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyCertificate {
    pub c0: Rational,
    pub v0: Rational,
    pub j: i64,
    pub u_j: Rational,
    pub curve: Cubic,
    /// x = (c0 + i)^3 for i = -2, -1, 0, 1, 2, with nonnegative y
    pub points: [Point; 5],
    /// Coefficient bound of the relation search that was run, 0 if none.
    pub independence_bound_checked: u32,
}

/// Everything about `(c0, v0, seed)` that does not depend on `j`.
#[derive(Clone, Debug)]
pub struct Family {
    c0: Rational,
    v0: Rational,
    reduction: WeierstrassReduction,
    seed_image: Point,
}

impl Family {
    pub fn new(c0: &Rational, v0: &Rational, seed_u: &Rational, seed_t: &Rational) -> Result<Self> {
        let quartic = quartic_from(c0, v0)?;
        let seed = QuarticPoint::affine(seed_u.clone(), seed_t.clone());
        Self::with_quartic(c0, v0, &quartic, &seed)
    }

    fn with_quartic(c0: &Rational, v0: &Rational, quartic: &Quartic, seed: &QuarticPoint) -> Result<Self> {
        let reduction = WeierstrassReduction::new(quartic)?;
        let seed_image = reduction.to_weierstrass(seed)?;
        if !reduction.curve().is_infinite_order(&seed_image) {
            return Err(Error::FiniteOrder);
        }
        Ok(Family { c0: c0.clone(), v0: v0.clone(), reduction, seed_image })
    }

    pub fn reduction(&self) -> &WeierstrassReduction {
        &self.reduction
    }

    pub fn seed_image(&self) -> &Point {
        &self.seed_image
    }

    /// The `j`-th member: multiply the seed on the Jacobian, pull back to the
    /// quartic, and rebuild the curve from the resulting chord direction.
    pub fn member(&self, j: i64) -> Result<FamilyCertificate> {
        if j == 0 {
            return Err(Error::ZeroMultiplier);
        }
        let multiple = self.reduction.curve().scalar_mul(j, &self.seed_image);
        let (u_j, t_j) = match self.reduction.to_quartic(&multiple)? {
            QuarticPoint::Affine { u, t } => (u, t),
            QuarticPoint::AtInfinity(_) => return Err(Error::ExceptionalPoint),
        };
        let one = Rational::from_integer(1.into());
        let tuple = pqrs(&self.c0, &u_j, &self.v0, &one)?;
        let curve = klm_from_pqr(&self.c0, &tuple.p, &tuple.q, &tuple.r)?;

        let cube = |i: i64| {
            let x = &self.c0 + Rational::from_integer(i.into());
            &x * &x * &x
        };
        let points = [(cube(-2), t_j), (cube(-1), tuple.p), (cube(0), tuple.q), (cube(1), tuple.r), (cube(2), tuple.s)]
            .map(|(x, y)| CurvePoint::affine(x, y.abs()));
        if !points.iter().all(|p| curve.on_curve(p)) {
            return Err(Error::NotOnCurve);
        }
        Ok(FamilyCertificate {
            c0: self.c0.clone(),
            v0: self.v0.clone(),
            j,
            u_j,
            curve,
            points,
            independence_bound_checked: 0,
        })
    }
}

/// One-shot form of [`Family::member`].
pub fn family_member(c0: &Rational, v0: &Rational, seed: (&Rational, &Rational), j: i64) -> Result<FamilyCertificate> {
    Family::new(c0, v0, seed.0, seed.1)?.member(j)
}
