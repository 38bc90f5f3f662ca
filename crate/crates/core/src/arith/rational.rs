use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Builds `n/d` in lowest terms with a positive denominator.
pub fn make_rational(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Rational> {
    let d = d.into();
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(n.into(), d))
}

/// Exact nonnegative square root, `Ok(None)` when `r` is not the square of a
/// rational.
pub fn sqrt_exact(r: &Rational) -> Result<Option<Rational>> {
    if r.is_negative() {
        return Err(Error::NegativeInput);
    }
    // canonical form means numerator and denominator are squares separately
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    if &(&sn * &sn) != num {
        return Ok(None);
    }
    let sd = den.sqrt();
    if &(&sd * &sd) != den {
        return Ok(None);
    }
    Ok(Some(Rational::new_raw(sn, sd)))
}

/// True when `r` is the square of a rational (negative values never are).
pub fn is_square(r: &Rational) -> bool {
    !r.is_negative() && matches!(sqrt_exact(r), Ok(Some(_)))
}

/// Exact real cube root, if `r` is the cube of a rational.
pub fn cube_root_exact(r: &Rational) -> Option<Rational> {
    let num = r.numer();
    let den = r.denom();
    let cn = num.cbrt();
    if &(&cn * &cn * &cn) != num {
        return None;
    }
    let cd = den.cbrt();
    if &(&cd * &cd * &cd) != den {
        return None;
    }
    Some(Rational::new_raw(cn, cd))
}

/// Canonical text form: `"num/den"`, or `"num"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `"num/den"` or `"num"` (surrounding whitespace allowed) and
/// re-canonicalizes.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_owned());
    let s_trim = s.trim();
    let (n, d) = match s_trim.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s_trim, "1"),
    };
    let n = parse_int(n).ok_or_else(bad)?;
    let d = parse_int(d).ok_or_else(bad)?;
    make_rational(n, d)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('+').unwrap_or(s);
    if digits.is_empty() {
        return None;
    }
    BigInt::from_str(digits).ok()
}

/// Natural log of `|n|`; `n` must be nonzero.
pub(crate) fn ln_abs(n: &BigInt) -> f64 {
    debug_assert!(n.sign() != Sign::NoSign);
    let bits = n.bits();
    if bits <= 1000 {
        let (_, digits) = n.to_u64_digits();
        let mut acc = 0f64;
        for d in digits.iter().rev() {
            acc = acc * 18446744073709551616.0 + *d as f64;
        }
        return acc.ln();
    }
    let shift = bits - 64;
    let top: BigInt = n.abs() >> shift;
    let (_, digits) = top.to_u64_digits();
    (digits[0] as f64).ln() + shift as f64 * std::f64::consts::LN_2
}
