//! Exact arithmetic substrate: rationals, small linear algebra and
//! univariate polynomials.

mod linalg;
mod poly;
pub(crate) mod rational;

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

pub use linalg::{determinant_3x3, solve_linear_3x3};
pub use poly::{interpolate, interpolate_quartic, UniPoly};
pub use rational::{cube_root_exact, format_rational, is_square, make_rational, parse_rational, sqrt_exact};

/// Scalars the generic curve and polynomial code can run over.
///
/// Anything implementing [`Num`] with negation qualifies: `BigRational`,
/// `Ratio<i64>`, `f64`. Only exact types give meaningful equality tests.
pub trait Field: Clone + PartialEq + Debug + Num + Neg<Output = Self> {
    fn from_i64(n: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if n < 0 { -Self::one() } else { Self::one() };
        let mut base = unit;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            k >>= 1;
        }
        acc
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl<T> Field for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> {}
