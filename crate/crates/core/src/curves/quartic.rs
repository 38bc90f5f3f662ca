use std::fmt;

use super::CurvePoint;
use crate::arith::{sqrt_exact, Field, UniPoly};
use crate::error::{Error, Result};
use crate::Rational;

/// Genus-one quartic `t^2 = K u^4 + L u^3 + M u^2 + N u + P` whose leading
/// coefficient `K` is a nonzero square, stored together with its root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuarticCurve<F> {
    /// lowest degree first: `[P, N, M, L, K]`
    coeffs: [F; 5],
    lead_root: F,
}

impl<F: Field> QuarticCurve<F> {
    /// `coeffs` lowest degree first; `lead_root` must square to the leading
    /// coefficient.
    pub fn new(coeffs: [F; 5], lead_root: F) -> Result<Self> {
        if coeffs[4].is_zero() {
            return Err(Error::DegenerateCurve("quartic leading coefficient is zero"));
        }
        if lead_root.square() != coeffs[4] {
            return Err(Error::NotASquare);
        }
        let curve = QuarticCurve { coeffs, lead_root };
        if curve.discriminant_core().is_zero() {
            return Err(Error::SingularQuartic);
        }
        Ok(curve)
    }

    pub fn coeff(&self, degree: usize) -> &F {
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[F; 5] {
        &self.coeffs
    }

    pub fn lead(&self) -> &F {
        &self.coeffs[4]
    }

    pub fn lead_root(&self) -> &F {
        &self.lead_root
    }

    pub fn as_poly(&self) -> UniPoly<F> {
        UniPoly::new(self.coeffs.to_vec())
    }

    /// `I = 12KP - 3LN + M^2`
    pub fn invariant_i(&self) -> F {
        let [p, n, m, l, k] = self.coeffs.clone();
        F::from_i64(12) * k * p - F::from_i64(3) * l * n + m.square()
    }

    /// `J = 72KMP + 9LMN - 27KN^2 - 27L^2P - 2M^3`
    pub fn invariant_j(&self) -> F {
        let [p, n, m, l, k] = self.coeffs.clone();
        F::from_i64(72) * k.clone() * m.clone() * p.clone() + F::from_i64(9) * l.clone() * m.clone() * n.clone()
            - F::from_i64(27) * k * n.square()
            - F::from_i64(27) * l.square() * p
            - F::from_i64(2) * m.clone() * m.square()
    }

    fn discriminant_core(&self) -> F {
        let i = self.invariant_i();
        let j = self.invariant_j();
        F::from_i64(4) * i.clone() * i.square() - j.square()
    }

    /// `(4I^3 - J^2) / 27`, the discriminant of the associated cubic.
    pub fn discriminant(&self) -> F {
        self.discriminant_core() / F::from_i64(27)
    }

    pub fn eval(&self, u: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * u.clone() + c.clone())
    }

    /// Affine membership; the points at infinity cannot be expressed as a
    /// [`CurvePoint`] on this model.
    pub fn on_curve(&self, pt: &CurvePoint<F>) -> Result<bool> {
        match pt {
            CurvePoint::Identity => Err(Error::UnsupportedPoint),
            CurvePoint::Affine { x, y } => Ok(y.square() == self.eval(x)),
        }
    }
}

impl QuarticCurve<Rational> {
    /// Builds the quartic from a polynomial of degree exactly 4, taking the
    /// nonnegative square root of the leading coefficient.
    pub fn from_poly(poly: &UniPoly<Rational>) -> Result<Self> {
        if poly.degree() != 4 {
            return Err(Error::DegenerateCurve("quartic has degree below 4"));
        }
        let coeffs = [0, 1, 2, 3, 4].map(|i| poly.coeff(i));
        let root = sqrt_exact(&coeffs[4]).map_err(|_| Error::NotASquare)?.ok_or(Error::NotASquare)?;
        QuarticCurve::new(coeffs, root)
    }
}

impl<F: Field + fmt::Display> fmt::Display for QuarticCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, n, m, l, k] = &self.coeffs;
        write!(f, "t^2 = ({k})u^4 + ({l})u^3 + ({m})u^2 + ({n})u + ({p})")
    }
}
