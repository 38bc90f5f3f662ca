//! The construction pipeline, from a cube base `c` to an infinite family of
//! curves with five consecutive-cube points.

mod coefficients;
mod family;
mod probe;
mod quartic;
mod surface;
mod weierstrass;

pub use coefficients::{cubic_coefficients, cubic_coefficients_by_solve, klm_from_pqr};
pub use family::{family_member, Family, FamilyCertificate};
pub use probe::{six_term_probe, ProbeHit};
pub use quartic::{cube_point_square, offset_quartic_poly, quartic_from, sample_abscissae};
pub use surface::{chord_param, pqrs, surface_coeffs, PqrsTuple, QuadricSurface};
pub use weierstrass::{
    quartic_to_weierstrass, transport_to_quartic, transport_to_weierstrass, InfinityBranch, QuarticPoint,
    WeierstrassReduction,
};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Evaluates an integer polynomial given highest degree first.
fn horner(coeffs: &[i64], c: &Rational) -> Rational {
    coeffs.iter().fold(Rational::zero(), |acc, &k| acc * c + Rational::from_integer(k.into()))
}

fn pow(c: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * c)
}

/// Named polynomial in `c` that appears as a denominator somewhere in the
/// pipeline.
struct Factor {
    name: &'static str,
    coeffs: &'static [i64],
}

const C: Factor = Factor { name: "c", coeffs: &[1, 0] };
const C2_PLUS_2: Factor = Factor { name: "c^2+2", coeffs: &[1, 0, 2] };
const THREE_C2_PLUS_1: Factor = Factor { name: "3c^2+1", coeffs: &[3, 0, 1] };
const THREE_C2_MINUS_3C_PLUS_1: Factor = Factor { name: "3c^2-3c+1", coeffs: &[3, -3, 1] };
const THREE_C2_PLUS_3C_PLUS_1: Factor = Factor { name: "3c^2+3c+1", coeffs: &[3, 3, 1] };
const SEXTIC: Factor = Factor { name: "9c^6+9c^5+24c^4+21c^3+13c^2+6c+2", coeffs: &[9, 9, 24, 21, 13, 6, 2] };

/// Every factor of the closed-form coefficient and quadric denominators.
const DENOMINATOR_FACTORS: [Factor; 6] =
    [C, C2_PLUS_2, THREE_C2_PLUS_1, THREE_C2_MINUS_3C_PLUS_1, THREE_C2_PLUS_3C_PLUS_1, SEXTIC];

fn check_denominators(c: &Rational) -> Result<()> {
    for factor in &DENOMINATOR_FACTORS {
        if horner(factor.coeffs, c).is_zero() {
            return Err(Error::DenominatorVanishes { factor: factor.name, c: c.to_string() });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::int;

    #[test]
    fn horner_matches_direct_evaluation() {
        assert_eq!(horner(SEXTIC.coeffs, &int(1)), int(84));
        assert_eq!(horner(&[3, -3, 1], &int(2)), int(7));
        assert_eq!(pow(&int(-2), 9), int(-512));
    }

    #[test]
    fn zero_base_names_the_factor() {
        assert_eq!(check_denominators(&int(0)), Err(Error::DenominatorVanishes { factor: "c", c: "0".into() }));
        assert!(check_denominators(&int(3)).is_ok());
    }
}
