use num_integer::Integer;
use num_traits::Zero;

use super::{offset_quartic_poly, quartic_from};
use crate::arith::sqrt_exact;
use crate::error::Result;
use crate::Rational;

/// A rational `u` at which both the fifth-point and the sixth-point quartics
/// are squares, `t^2` and `z^2` respectively.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProbeHit {
    pub u: Rational,
    pub t: Rational,
    pub z: Rational,
}

fn root_if_square(r: &Rational) -> Option<Rational> {
    sqrt_exact(r).ok().flatten()
}

/// Searches `u = a/b` with `|a| ≤ bound`, `1 ≤ b ≤ bound` for points on the
/// intersection that would give a sixth cube at `x = (c+3)^3`.
pub fn six_term_probe(c: &Rational, v: &Rational, height_bound: u64) -> Result<Vec<ProbeHit>> {
    if height_bound == 0 {
        return Ok(Vec::new());
    }
    let fifth = quartic_from(c, v)?;
    let sixth = offset_quartic_poly(c, v, 3)?;
    let bound = height_bound as i64;
    let mut hits = Vec::new();
    for den in 1..=bound {
        for num in -bound..=bound {
            if num.gcd(&den) != 1 && !(num.is_zero() && den == 1) {
                continue;
            }
            let u = Rational::new(num.into(), den.into());
            let Some(t) = root_if_square(&fifth.eval(&u)) else { continue };
            let Some(z) = root_if_square(&sixth.eval(&u)) else { continue };
            hits.push(ProbeHit { u, t, z });
        }
    }
    Ok(hits)
}
