use std::fmt;

use super::Field;
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients stored lowest degree first.
///
/// Trailing zeros are stripped on construction, so the last stored
/// coefficient is the leading one; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    fn mul_linear(&self, root: &F) -> Self {
        // (x - root) * self
        let mut out = vec![F::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] = out[i + 1].clone() + c.clone();
            out[i] = out[i].clone() - c.clone() * root.clone();
        }
        UniPoly::new(out)
    }

    fn add_scaled(&self, other: &Self, scale: &F) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let out = (0..len).map(|i| self.coeff(i) + other.coeff(i) * scale.clone()).collect();
        UniPoly::new(out)
    }
}

impl<F: Field + fmt::Display> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Unique polynomial of degree `< samples.len()` through the given points,
/// built from Newton divided differences.
pub fn interpolate<F: Field>(samples: &[(F, F)]) -> Result<UniPoly<F>> {
    for (i, (xi, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateNode);
        }
    }
    let n = samples.len();
    let mut table: Vec<F> = samples.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = table[i].clone() - table[i - 1].clone();
            let den = samples[i].0.clone() - samples[i - level].0.clone();
            table[i] = num / den;
        }
    }
    // Horner over the Newton basis, innermost node first
    let mut poly = UniPoly::zero();
    for i in (0..n).rev() {
        poly = poly.mul_linear(&samples[i].0);
        poly = poly.add_scaled(&UniPoly::new(vec![F::one()]), &table[i]);
    }
    Ok(poly)
}

/// Degree-≤4 interpolant through exactly five samples.
pub fn interpolate_quartic<F: Field>(samples: &[(F, F)]) -> Result<UniPoly<F>> {
    if samples.len() != 5 {
        return Err(Error::SampleCount { expected: 5, got: samples.len() });
    }
    interpolate(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::make_rational;
    use crate::Rational;
    use proptest::prelude::*;

    fn int(n: i64) -> Rational {
        make_rational(n, 1).unwrap()
    }

    #[test]
    fn monomial_u4() {
        let samples: Vec<_> = [0, 1, -1, 2, -2].iter().map(|&u| (int(u), int(u.pow(4)))).collect();
        let p = interpolate_quartic(&samples).unwrap();
        assert_eq!(p.coeffs(), &[int(0), int(0), int(0), int(0), int(1)]);
        assert_eq!(p.degree(), 4);
    }

    #[test]
    fn degree_drops_for_quadratic_data() {
        let f = |u: i64| 3 * u * u - 2 * u + 7;
        let samples: Vec<_> = [0, 1, -1, 2, -2].iter().map(|&u| (int(u), int(f(u)))).collect();
        let p = interpolate_quartic(&samples).unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coeff(3), int(0));
        assert_eq!(p.coeff(4), int(0));
        assert_eq!(p.coeffs(), &[int(7), int(-2), int(3)]);
    }

    #[test]
    fn duplicate_node_is_rejected() {
        let samples: Vec<_> = [0, 1, 1, 2, 3].iter().map(|&u| (int(u), int(u))).collect();
        assert_eq!(interpolate_quartic(&samples), Err(Error::DuplicateNode));
    }

    #[test]
    fn wrong_sample_count() {
        let samples = vec![(int(0), int(1))];
        assert!(matches!(interpolate_quartic(&samples), Err(Error::SampleCount { expected: 5, got: 1 })));
    }

    #[test]
    fn zero_polynomial() {
        let p = UniPoly::new(vec![int(0), int(0)]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), 0);
        assert_eq!(p.eval(&int(9)), int(0));
        assert_eq!(p.to_string(), "0");
    }

    proptest! {
        #[test]
        fn interpolant_hits_every_sample(
            nodes in prop::collection::hash_set(-40i64..40, 5),
            values in prop::array::uniform5(-1000i64..1000),
            den in 1i64..30,
        ) {
            let samples: Vec<_> = nodes
                .iter()
                .zip(values.iter())
                .map(|(&u, &y)| (make_rational(u, den).unwrap(), int(y)))
                .collect();
            let p = interpolate_quartic(&samples).unwrap();
            prop_assert!(p.degree() <= 4);
            for (u, y) in &samples {
                prop_assert_eq!(&p.eval(u), y);
            }
        }
    }
}
