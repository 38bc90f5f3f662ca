//! The quartic model and its Jacobian `V^2 = U^3 - 27I·U - 27J`.
//!
//! Writing `s` for the root of the leading coefficient `K`, the forward map is
//! polynomial in `(u, t)`:
//!
//! ```text
//! x = -2s·t + 2K·u^2 + L·u
//! y = 4K·t·u - 4sK·u^3 - 2sL·u^2 - 2sM·u + L^2·u / (2s)
//! U = 9x + 3M
//! V = 27(2y - (L/s)·x - 2sN) / 2
//! ```
//!
//! The point at infinity with `t/u^2 → +s` goes to `R` and the one with
//! `t/u^2 → -s` goes to the identity. Under this map the involution
//! `(u, t) ↦ (u, -t)` becomes `S ↦ R - S`, which covers the one affine point
//! where the inverse formula degenerates.

use num_traits::Zero;

use crate::curves::{CurvePoint, ShortWCurve};
use crate::error::{Error, Result};
use crate::{Point, Quartic, Rational, ShortCurve};

/// Which of the two points at infinity `(1 : ±s : 0)` of the quartic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum InfinityBranch {
    /// `t/u^2 → +s`; maps to `R`.
    Positive,
    /// `t/u^2 → -s`; maps to the identity.
    Negative,
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum QuarticPoint {
    Affine { u: Rational, t: Rational },
    AtInfinity(InfinityBranch),
}

impl QuarticPoint {
    pub fn affine(u: Rational, t: Rational) -> Self {
        QuarticPoint::Affine { u, t }
    }

    /// `(u, -t)`, swapping the two points at infinity.
    pub fn flip(&self) -> Self {
        match self {
            QuarticPoint::Affine { u, t } => QuarticPoint::affine(u.clone(), -t.clone()),
            QuarticPoint::AtInfinity(InfinityBranch::Positive) => QuarticPoint::AtInfinity(InfinityBranch::Negative),
            QuarticPoint::AtInfinity(InfinityBranch::Negative) => QuarticPoint::AtInfinity(InfinityBranch::Positive),
        }
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The associated short curve `V^2 = U^3 - 27I·U - 27J` and the image `R` of
/// the point at infinity `(1 : s : 0)`.
pub fn quartic_to_weierstrass(quartic: &Quartic) -> Result<(ShortCurve, Point)> {
    if quartic.discriminant().is_zero() {
        return Err(Error::SingularQuartic);
    }
    let curve = ShortWCurve::new(q(-27) * quartic.invariant_i(), q(-27) * quartic.invariant_j())?;
    let [_, n, m, l, k] = quartic.coeffs();
    let s = quartic.lead_root();
    let x = q(3) * (q(3) * l * l - q(8) * k * m) / (q(4) * k);
    let y = q(27) * (l * l * l + q(8) * k * k * n - q(4) * k * l * m) / (q(8) * s * s * s);
    Ok((curve, CurvePoint::affine(x, y)))
}

/// A quartic together with its Jacobian and the two transport maps.
#[derive(Clone, Debug)]
pub struct WeierstrassReduction {
    quartic: Quartic,
    curve: ShortCurve,
    base: Point,
}

impl WeierstrassReduction {
    pub fn new(quartic: &Quartic) -> Result<Self> {
        let (curve, base) = quartic_to_weierstrass(quartic)?;
        Ok(WeierstrassReduction { quartic: quartic.clone(), curve, base })
    }

    pub fn quartic(&self) -> &Quartic {
        &self.quartic
    }

    pub fn curve(&self) -> &ShortCurve {
        &self.curve
    }

    /// Image `R` of the point at infinity `(1 : s : 0)`.
    pub fn base_image(&self) -> &Point {
        &self.base
    }

    pub fn to_weierstrass(&self, pt: &QuarticPoint) -> Result<Point> {
        let (u, t) = match pt {
            QuarticPoint::AtInfinity(InfinityBranch::Positive) => return Ok(self.base.clone()),
            QuarticPoint::AtInfinity(InfinityBranch::Negative) => return Ok(CurvePoint::Identity),
            QuarticPoint::Affine { u, t } => (u, t),
        };
        if t * t != self.quartic.eval(u) {
            return Err(Error::NotOnCurve);
        }
        let [_, n, m, l, k] = self.quartic.coeffs();
        let s = self.quartic.lead_root();
        let x = -q(2) * s * t + q(2) * k * u * u + l * u;
        let y = q(4) * k * t * u - q(4) * s * k * u * u * u - q(2) * s * l * u * u - q(2) * s * m * u
            + l * l * u / (q(2) * s);
        let big_u = q(9) * &x + q(3) * m;
        let big_v = q(27) * (q(2) * y - l * &x / s - q(2) * s * n) / q(2);
        Ok(CurvePoint::affine(big_u, big_v))
    }

    pub fn to_quartic(&self, pt: &Point) -> Result<QuarticPoint> {
        if !self.curve.on_curve(pt) {
            return Err(Error::NotOnCurve);
        }
        match self.invert(pt)? {
            Some(found) => Ok(found),
            None => {
                // the inverse is 0/0 here; go through the involution instead
                let partner = self.curve.sub(&self.base, pt);
                match self.invert(&partner)? {
                    Some(found) => Ok(found.flip()),
                    None => Err(Error::ExceptionalPoint),
                }
            }
        }
    }

    /// Direct inverse formula; `None` where it degenerates to 0/0.
    fn invert(&self, pt: &Point) -> Result<Option<QuarticPoint>> {
        let (big_u, big_v) = match pt {
            CurvePoint::Identity => return Ok(Some(QuarticPoint::AtInfinity(InfinityBranch::Negative))),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let [_, n, m, l, _] = self.quartic.coeffs();
        let s = self.quartic.lead_root();
        let x = (big_u - q(3) * m) / q(9);
        let y = (q(2) * big_v / q(27) + l * &x / s + q(2) * s * n) / q(2);
        let den = -q(2) * s * (&x + m) + l * l / (q(2) * s);
        if den.is_zero() {
            if y.is_zero() {
                return Ok(None);
            }
            return Ok(Some(QuarticPoint::AtInfinity(InfinityBranch::Positive)));
        }
        let u = y / den;
        let t = s * &u * &u - (&x - l * &u) / (q(2) * s);
        if &t * &t != self.quartic.eval(&u) {
            return Err(Error::ExceptionalPoint);
        }
        Ok(Some(QuarticPoint::affine(u, t)))
    }
}

pub fn transport_to_weierstrass(quartic: &Quartic, pt: &QuarticPoint) -> Result<Point> {
    WeierstrassReduction::new(quartic)?.to_weierstrass(pt)
}

pub fn transport_to_quartic(quartic: &Quartic, pt: &Point) -> Result<QuarticPoint> {
    WeierstrassReduction::new(quartic)?.to_quartic(pt)
}
