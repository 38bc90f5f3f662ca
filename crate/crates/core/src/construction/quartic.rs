use super::{cubic_coefficients, pow, pqrs};
use crate::arith::interpolate_quartic;
use crate::curves::QuarticCurve;
use crate::error::{Error, Result};
use crate::{Poly, Quartic, Rational};

/// Value of the fitted cubic `kx^3 + lx + m` at `x = (c + offset)^3`, where the
/// curve is the one through the first three cube points for the chord
/// direction `(u, v, 1)`.
pub fn cube_point_square(c: &Rational, v: &Rational, u: &Rational, offset: i64) -> Result<Rational> {
    let one = Rational::from_integer(1.into());
    let t = pqrs(c, u, v, &one)?;
    let [k, l, m] = cubic_coefficients(c, &t.p, &t.q, &t.r)?;
    let x3 = pow(&(c + Rational::from_integer(offset.into())), 3);
    Ok(k * pow(&x3, 3) + l * x3 + m)
}

/// First five integers from `0, 1, -1, 2, -2, ...` whose chord direction is
/// non-degenerate for `(c, v)`.
pub fn sample_abscissae(c: &Rational, v: &Rational) -> Result<Vec<Rational>> {
    let one = Rational::from_integer(1.into());
    let mut nodes = Vec::with_capacity(5);
    for step in 0i64.. {
        let u = Rational::from_integer((if step % 2 == 1 { (step + 1) / 2 } else { -step / 2 }).into());
        match pqrs(c, &u, v, &one) {
            Ok(_) => nodes.push(u),
            Err(Error::DegenerateChord) => continue,
            Err(e) => return Err(e),
        }
        if nodes.len() == 5 {
            break;
        }
    }
    Ok(nodes)
}

/// `u ↦ k(c+offset)^9 + l(c+offset)^3 + m` as a polynomial of degree ≤ 4,
/// recovered exactly from five pipeline samples.
pub fn offset_quartic_poly(c: &Rational, v: &Rational, offset: i64) -> Result<Poly> {
    let samples = sample_abscissae(c, v)?
        .into_iter()
        .map(|u| cube_point_square(c, v, &u, offset).map(|y| (u, y)))
        .collect::<Result<Vec<_>>>()?;
    interpolate_quartic(&samples)
}

/// The quartic `t^2 = Ku^4 + Lu^3 + Mu^2 + Nu + P` whose rational points
/// `(u, t)` put a fifth point `((c-2)^3, t)` on the curve.
pub fn quartic_from(c: &Rational, v: &Rational) -> Result<Quartic> {
    QuarticCurve::from_poly(&offset_quartic_poly(c, v, -2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{int, published_quartic, rat};

    #[test]
    fn reproduces_the_published_quartic() {
        let q = quartic_from(&int(3), &rat("3094/5795")).unwrap();
        assert_eq!(q, published_quartic());
    }

    #[test]
    fn leading_coefficient_ignores_v() {
        let a = quartic_from(&int(3), &rat("3094/5795")).unwrap();
        let b = quartic_from(&int(3), &rat("-7/2")).unwrap();
        assert_eq!(a.lead(), b.lead());
        assert_ne!(a, b);
    }

    #[test]
    fn abscissae_skip_degenerate_chords() {
        // a1*u + a2*v + a3 = 0 at u = 0 when v = -a3/a2
        let c = int(3);
        let v = rat("5809440/13122564");
        let nodes = sample_abscissae(&c, &v).unwrap();
        assert_eq!(nodes, [1, -1, 2, -2, 3].map(int));
    }

    #[test]
    fn polynomial_matches_pipeline_off_the_nodes() {
        let c = rat("5/2");
        let v = rat("-3/7");
        let q = quartic_from(&c, &v).unwrap();
        for u in ["11/3", "-19/5", "101/7"] {
            let u = rat(u);
            assert_eq!(q.eval(&u), cube_point_square(&c, &v, &u, -2).unwrap());
        }
    }
}
