use std::fmt;

use super::{CurvePoint, ShortWCurve};
use crate::arith::Field;
use crate::error::{Error, Result};

/// `y^2 = kx^3 + lx + m`, nonsingular with `k != 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicCurve<F> {
    k: F,
    l: F,
    m: F,
}

impl<F: Field> CubicCurve<F> {
    pub fn new(k: F, l: F, m: F) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::DegenerateCurve("cubic coefficient k is zero"));
        }
        let curve = CubicCurve { k, l, m };
        if curve.discriminant().is_zero() {
            return Err(Error::DegenerateCurve("kx^3 + lx + m has a repeated root"));
        }
        Ok(curve)
    }

    pub fn cubic_coeff(&self) -> &F {
        &self.k
    }

    pub fn linear_coeff(&self) -> &F {
        &self.l
    }

    pub fn constant_coeff(&self) -> &F {
        &self.m
    }

    /// Discriminant of `kx^3 + lx + m`: `-4kl^3 - 27k^2m^2`.
    pub fn discriminant(&self) -> F {
        let l3 = self.l.clone() * self.l.square();
        F::from_i64(-4) * self.k.clone() * l3 - F::from_i64(27) * self.k.square() * self.m.square()
    }

    pub fn rhs(&self, x: &F) -> F {
        self.k.clone() * x.clone() * x.square() + self.l.clone() * x.clone() + self.m.clone()
    }

    pub fn on_curve(&self, pt: &CurvePoint<F>) -> bool {
        match pt {
            CurvePoint::Identity => true,
            CurvePoint::Affine { x, y } => y.square() == self.rhs(x),
        }
    }

    /// The isomorphic short model `Y^2 = X^3 + lk·X + mk^2` with its point maps.
    pub fn to_short(&self) -> ShortModel<F> {
        let a = self.l.clone() * self.k.clone();
        let b = self.m.clone() * self.k.square();
        let curve = ShortWCurve::new(a, b).expect("nonsingular cubic has a nonsingular short model");
        ShortModel { curve, scale: self.k.clone() }
    }

    pub fn j_invariant(&self) -> F {
        self.to_short().curve.j_invariant()
    }
}

impl<F: Field + fmt::Display> fmt::Display for CubicCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = ({})x^3 + ({})x + ({})", self.k, self.l, self.m)
    }
}

/// A cubic model's short Weierstrass twin, related by `(X, Y) = (kx, ky)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShortModel<F> {
    pub curve: ShortWCurve<F>,
    scale: F,
}

impl<F: Field> ShortModel<F> {
    pub fn forward(&self, pt: &CurvePoint<F>) -> CurvePoint<F> {
        match pt {
            CurvePoint::Identity => CurvePoint::Identity,
            CurvePoint::Affine { x, y } => {
                CurvePoint::affine(x.clone() * self.scale.clone(), y.clone() * self.scale.clone())
            }
        }
    }

    pub fn backward(&self, pt: &CurvePoint<F>) -> CurvePoint<F> {
        match pt {
            CurvePoint::Identity => CurvePoint::Identity,
            CurvePoint::Affine { x, y } => {
                CurvePoint::affine(x.clone() / self.scale.clone(), y.clone() / self.scale.clone())
            }
        }
    }
}
