//! Exact construction of elliptic curves `y^2 = kx^3 + lx + m` that carry five
//! rational points whose x-coordinates are the consecutive cubes
//! `(c-2)^3, ..., (c+2)^3`.
//!
//! The pipeline runs entirely over arbitrary-precision rationals:
//!
//! 1. [`construction::klm_from_pqr`] fits `(k, l, m)` through three cube points.
//! 2. [`construction::pqrs`] parametrizes the quadric that forces a fourth.
//! 3. [`construction::quartic_from`] turns the fifth condition into a quartic
//!    `t^2 = q(u)` with square leading coefficient.
//! 4. [`construction::quartic_to_weierstrass`] and the transport maps move
//!    points between that quartic and an elliptic curve in short form.
//! 5. [`construction::family_member`] multiplies a seed point there and reads
//!    a new curve back off.
//!
//! [`certify`] re-checks the results independently.
//!
//! The field-level code ([`arith::UniPoly`], the 3×3 solver and the curve
//! models) is generic over [`arith::Field`]; the aliases below fix the scalar
//! to [`Rational`].

pub mod arith;
pub mod certify;
pub mod construction;
pub mod curves;
mod error;

pub use error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

pub type Poly = arith::UniPoly<Rational>;
pub type Point = curves::CurvePoint<Rational>;
pub type Cubic = curves::CubicCurve<Rational>;
pub type ShortCurve = curves::ShortWCurve<Rational>;
pub type Quartic = curves::QuarticCurve<Rational>;

#[cfg(test)]
pub(crate) mod testutil;
