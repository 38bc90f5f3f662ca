use super::Field;
use crate::error::{Error, Result};

pub fn determinant_3x3<F: Field>(m: &[[F; 3]; 3]) -> F {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1].clone() * m[r2][c2].clone() - m[r1][c2].clone() * m[r2][c1].clone()
    };
    m[0][0].clone() * minor(1, 2, 1, 2) - m[0][1].clone() * minor(1, 2, 0, 2) + m[0][2].clone() * minor(1, 2, 0, 1)
}

/// Solves `m · x = rhs` exactly by Cramer's rule.
pub fn solve_linear_3x3<F: Field>(m: &[[F; 3]; 3], rhs: &[F; 3]) -> Result<[F; 3]> {
    let det = determinant_3x3(m);
    if det.is_zero() {
        return Err(Error::SingularSystem);
    }
    let column_replaced = |col: usize| {
        let mut a = m.clone();
        for (row, value) in a.iter_mut().zip(rhs.iter()) {
            row[col] = value.clone();
        }
        determinant_3x3(&a) / det.clone()
    };
    Ok([column_replaced(0), column_replaced(1), column_replaced(2)])
}
