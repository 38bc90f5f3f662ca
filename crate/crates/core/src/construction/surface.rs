use num_traits::Zero;

use super::{check_denominators, horner};
use crate::error::{Error, Result};
use crate::Rational;

/// `a1 x^2 + a2 y^2 + a3 z^2 + a4 t^2 = 0` passing through `(1:1:1:1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadricSurface {
    coeffs: [Rational; 4],
}

impl QuadricSurface {
    pub fn new(coeffs: [Rational; 4]) -> Result<Self> {
        let sum: Rational = coeffs.iter().sum();
        if !sum.is_zero() {
            return Err(Error::SurfaceMissesBasePoint);
        }
        Ok(QuadricSurface { coeffs })
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    pub fn eval(&self, pt: &[Rational; 4]) -> Rational {
        self.coeffs.iter().zip(pt).map(|(a, x)| a * x * x).sum()
    }

    fn chord_slope(&self, u: &Rational, v: &Rational, w: &Rational) -> Rational {
        let [a1, a2, a3, _] = &self.coeffs;
        a1 * u + a2 * v + a3 * w
    }
}

/// The quadric `a1 p^2 + a2 q^2 + a3 r^2 + a4 s^2 = 0` cut out by requiring a
/// fourth point at `x = (c+2)^3`.
pub fn surface_coeffs(c: &Rational) -> Result<QuadricSurface> {
    check_denominators(c)?;
    let a1 = horner(&[27, 243, 1026, 2646, 4536, 5292, 4159, 2109, 626, 84], c);
    let a2 = horner(&[-81, -486, -1674, -3780, -5544, -5544, -3951, -1950, -762, -168], c);
    let a3 = horner(&[81, 243, 702, 1134, 1008, 252, -207, -159, 138, 84], c);
    let a4 = -(horner(&[3, -3, 1], c) * horner(&[3, 0, 1], c) * horner(&[3, 3, 1], c) * horner(&[1, 0, 2], c) * c);
    QuadricSurface::new([a1, a2, a3, a4])
}

/// Second intersection of the surface with the line through `(1:1:1:1)` in
/// direction `(u:v:w:0)`, returned as the unnormalized projective point
/// `(a + bu, a + bv, a + bw, a)`.
pub fn chord_param(surface: &QuadricSurface, u: &Rational, v: &Rational, w: &Rational) -> Result<[Rational; 4]> {
    let [a1, a2, a3, _] = surface.coeffs();
    let slope = surface.chord_slope(u, v, w);
    if slope.is_zero() {
        return Err(Error::DegenerateChord);
    }
    let a = -(a1 * u * u + a2 * v * v + a3 * w * w);
    let b = slope * Rational::from_integer(2.into());
    Ok([&a + &b * u, &a + &b * v, &a + &b * w, a])
}

/// y-values at `(c-1)^3, c^3, (c+1)^3, (c+2)^3`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PqrsTuple {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub s: Rational,
}

impl PqrsTuple {
    pub fn as_array(&self) -> [Rational; 4] {
        [self.p.clone(), self.q.clone(), self.r.clone(), self.s.clone()]
    }
}

/// Rational solution of the four-point condition, scaled so that the
/// `u^2`-coefficient of `p` is the root of the quartic's leading coefficient.
pub fn pqrs(c: &Rational, u: &Rational, v: &Rational, w: &Rational) -> Result<PqrsTuple> {
    let surface = surface_coeffs(c)?;
    if surface.chord_slope(u, v, w).is_zero() {
        return Err(Error::DegenerateChord);
    }
    let f = |coeffs: &[i64]| horner(coeffs, c);
    let three = Rational::from_integer(3.into());
    // (c+1)(3c^2+3c+1)(3c^2+6c+4)(3c^2+9c+7)(c^2+2c+3)
    let fu = f(&[1, 1]) * f(&[3, 3, 1]) * f(&[3, 6, 4]) * f(&[3, 9, 7]) * f(&[1, 2, 3]);
    // 3(c^2+c+1)(3c^2+1)(3c^2+9c+7)(3c^3+6c^2+18c+8)
    let fv = &three * f(&[1, 1, 1]) * f(&[3, 0, 1]) * f(&[3, 9, 7]) * f(&[3, 6, 18, 8]);
    // 3(c^2+c+1)(3c^2-3c+1)(3c^2+6c+4)(3c^3+3c^2+15c+7)
    let fw = &three * f(&[1, 1, 1]) * f(&[3, -3, 1]) * f(&[3, 6, 4]) * f(&[3, 3, 15, 7]);

    let (uu, vv, ww) = (u * u, v * v, w * w);
    let two = Rational::from_integer(2.into());
    let p = &fu * &uu + &fv * &vv - &fw * &ww - &two * &fv * v * u + &two * &fw * w * u;
    let q = -(&fu * &uu) - &fv * &vv - &fw * &ww + &two * &fu * v * u + &two * &fw * w * v;
    let r = -(&fu * &uu) + &fv * &vv + &fw * &ww + &two * &fu * w * u - &two * &fv * w * v;
    let s = -(&fu * &uu) + &fv * &vv - &fw * &ww;
    Ok(PqrsTuple { p, q, r, s })
}
