use num_traits::Zero;

use super::{check_denominators, horner, pow, SEXTIC};
use crate::arith::solve_linear_3x3;
use crate::curves::CubicCurve;
use crate::error::{Error, Result};
use crate::{Cubic, Rational};

/// `(k, l, m)` with `(c-1)^3, c^3, (c+1)^3` carrying y-values `p, q, r`, from
/// the closed forms. No curve validity is checked.
pub fn cubic_coefficients(c: &Rational, p: &Rational, q: &Rational, r: &Rational) -> Result<[Rational; 3]> {
    check_denominators(c)?;
    let (p2, q2, r2) = (p * p, q * q, r * r);
    let combine = |cp: &[i64], cq: &[i64], cr: &[i64]| horner(cp, c) * &p2 + horner(cq, c) * &q2 + horner(cr, c) * &r2;
    let six = Rational::from_integer(6.into());

    let k_num = combine(&[3, 3, 1], &[-6, 0, -2], &[3, -3, 1]);
    let k_den = &six * c * horner(&[27, 0, 54, 0, 0, 0, 1, 0, 2], c);

    let l_num = combine(
        &[-9, -36, -84, -126, -126, -84, -36, -9, -1],
        &[18, 0, 168, 0, 252, 0, 72, 0, 2],
        &[-9, 36, -84, 126, -126, 84, -36, 9, -1],
    );
    let lm_den = &six * horner(&[3, -3, 1], c) * horner(SEXTIC.coeffs, c);
    let l_den = &lm_den * c;

    let m_num = combine(
        &[6, 33, 83, 126, 126, 84, 36, 9, 1, 0, 0],
        &[-12, 0, -4, 0, 72, 0, -72, 0, 4, 0, 12],
        &[6, -33, 83, -126, 126, -84, 36, -9, 1, 0, 0],
    );

    Ok([k_num / k_den, l_num / l_den, m_num / lm_den])
}

/// The same coefficients from an exact solve of the three point equations.
pub fn cubic_coefficients_by_solve(c: &Rational, p: &Rational, q: &Rational, r: &Rational) -> Result<[Rational; 3]> {
    let one = Rational::from_integer(1.into());
    let row = |x: Rational| [pow(&x, 9), pow(&x, 3), one.clone()];
    let matrix = [row(c - &one), row(c.clone()), row(c + &one)];
    solve_linear_3x3(&matrix, &[p * p, q * q, r * r])
}

/// The curve `y^2 = kx^3 + lx + m` through `((c-1)^3, p), (c^3, q), ((c+1)^3, r)`.
///
/// The closed forms and the linear solve are both evaluated and must agree.
pub fn klm_from_pqr(c: &Rational, p: &Rational, q: &Rational, r: &Rational) -> Result<Cubic> {
    let closed = cubic_coefficients(c, p, q, r)?;
    let solved = cubic_coefficients_by_solve(c, p, q, r)?;
    if closed != solved {
        return Err(Error::RouteMismatch);
    }
    let [k, l, m] = closed;
    if k.is_zero() {
        return Err(Error::DegenerateCurve("cubic coefficient k is zero"));
    }
    CubicCurve::new(k, l, m)
}
