use std::fmt;

use super::CurvePoint;
use crate::arith::Field;
use crate::error::{Error, Result};

/// Largest order of a torsion point on an elliptic curve over Q (Mazur).
pub const MAX_TORSION_ORDER: u32 = 12;

/// `Y^2 = X^3 + aX + b` with `4a^3 + 27b^2 != 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShortWCurve<F> {
    a: F,
    b: F,
}

impl<F: Field> ShortWCurve<F> {
    pub fn new(a: F, b: F) -> Result<Self> {
        let curve = ShortWCurve { a, b };
        if curve.discriminant_core().is_zero() {
            return Err(Error::DegenerateCurve("4A^3 + 27B^2 = 0"));
        }
        Ok(curve)
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    pub fn b(&self) -> &F {
        &self.b
    }

    fn discriminant_core(&self) -> F {
        F::from_i64(4) * self.a.clone() * self.a.square() + F::from_i64(27) * self.b.square()
    }

    /// `-16(4a^3 + 27b^2)`.
    pub fn discriminant(&self) -> F {
        F::from_i64(-16) * self.discriminant_core()
    }

    pub fn j_invariant(&self) -> F {
        let four_a3 = F::from_i64(4) * self.a.clone() * self.a.square();
        F::from_i64(1728) * four_a3 / self.discriminant_core()
    }

    pub fn rhs(&self, x: &F) -> F {
        x.clone() * x.square() + self.a.clone() * x.clone() + self.b.clone()
    }

    pub fn on_curve(&self, pt: &CurvePoint<F>) -> bool {
        match pt {
            CurvePoint::Identity => true,
            CurvePoint::Affine { x, y } => y.square() == self.rhs(x),
        }
    }

    pub fn negate(&self, pt: &CurvePoint<F>) -> CurvePoint<F> {
        pt.negate()
    }

    pub fn add(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Identity, _) => return q.clone(),
            (_, CurvePoint::Identity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if (y1.clone() + y2.clone()).is_zero() {
                return CurvePoint::Identity;
            }
            // tangent
            (F::from_i64(3) * x1.square() + self.a.clone()) / (F::from_i64(2) * y1.clone())
        } else {
            (y2.clone() - y1.clone()) / (x2.clone() - x1.clone())
        };
        let x3 = slope.square() - x1.clone() - x2.clone();
        let y3 = slope * (x1.clone() - x3.clone()) - y1.clone();
        CurvePoint::affine(x3, y3)
    }

    pub fn double(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        self.add(p, p)
    }

    pub fn sub(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        self.add(p, &q.negate())
    }

    /// `n·p`, with negative `n` going through the inverse.
    pub fn scalar_mul(&self, n: i64, p: &CurvePoint<F>) -> CurvePoint<F> {
        let mut base = if n < 0 { p.negate() } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.double(&base);
            }
        }
        acc
    }

    /// Order of `p` when it is at most [`MAX_TORSION_ORDER`], else `None`.
    ///
    /// Only multiples up to half the bound are formed: for `n = a + b`,
    /// `nP = O` iff `aP = -bP`. Coordinate size grows with the square of the
    /// multiplier, so this is several times cheaper than walking to `12P`.
    pub fn torsion_order(&self, p: &CurvePoint<F>) -> Option<u32> {
        let half = MAX_TORSION_ORDER.div_ceil(2);
        let mut multiples = vec![p.clone()];
        for n in 1..=half {
            let last = &multiples[n as usize - 1];
            if last.is_identity() {
                return Some(n);
            }
            if n < half {
                multiples.push(self.add(last, p));
            }
        }
        let top = &multiples[half as usize - 1];
        (half + 1..=MAX_TORSION_ORDER).find(|&n| *top == multiples[(n - half) as usize - 1].negate())
    }

    /// Over Q a point of finite order has order ≤ 12, so this test is exact.
    pub fn is_infinite_order(&self, p: &CurvePoint<F>) -> bool {
        self.torsion_order(p).is_none()
    }
}

impl<F: Field + fmt::Display> fmt::Display for ShortWCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y^2 = X^3 + ({})X + ({})", self.a, self.b)
    }
}
