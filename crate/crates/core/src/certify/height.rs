//! Doubling-limit estimate of the canonical height,
//! `ĥ(P) ≈ h(x(2^n P)) / 4^n` with `h(a/b) = ln max(|a|, b)`.
//!
//! Iterates are computed on an integral model with x-only doubling, so each
//! step costs one gcd instead of a full rational point addition.

use std::thread;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::arith::rational::ln_abs;
use crate::curves::CurvePoint;
use crate::error::{Error, Result};
use crate::{Integer, Point, Rational, ShortCurve};

pub const MAX_DOUBLINGS: u32 = 8;

#[derive(Clone, PartialEq, Debug)]
pub struct HeightEstimate {
    /// `h(x(2^n P)) / 4^n` at the requested `n`.
    pub value: f64,
    /// `(k, h(x(2^k P)) / 4^k)` for the last (up to) three `k ≤ n`.
    pub iterates: Vec<(u32, f64)>,
    /// `|value_n - value_{n-1}|`; the sequence is Cauchy at rate `4^-n` but
    /// not monotone, so this is a heuristic radius.
    pub error_radius: f64,
    /// Some `2^k P` hit the identity; the value is then exactly 0.
    pub torsion: bool,
}

/// `ln max(|numerator|, denominator)`.
pub fn naive_height(x: &Rational) -> f64 {
    let num = x.numer();
    let den = x.denom();
    if num.abs() >= *den {
        if num.is_zero() {
            0.0
        } else {
            ln_abs(num)
        }
    } else {
        ln_abs(den)
    }
}

fn torsion_estimate() -> HeightEstimate {
    HeightEstimate { value: 0.0, iterates: vec![(0, 0.0)], error_radius: 0.0, torsion: true }
}

pub fn canonical_height(curve: &ShortCurve, p: &Point, doublings: u32) -> Result<HeightEstimate> {
    if !(1..=MAX_DOUBLINGS).contains(&doublings) {
        return Err(Error::DoublingsOutOfRange(doublings));
    }
    if !curve.on_curve(p) {
        return Err(Error::NotOnCurve);
    }
    let CurvePoint::Affine { x, .. } = p else {
        return Ok(torsion_estimate());
    };

    // integral model: A d^4, B d^6 with x scaled by d^2
    let d = curve.a().denom().lcm(curve.b().denom());
    let d2 = &d * &d;
    let d4 = &d2 * &d2;
    let a = (curve.a() * Rational::from_integer(d4.clone())).to_integer();
    let b = (curve.b() * Rational::from_integer(&d4 * &d2)).to_integer();
    let scaled = x * Rational::from_integer(d2.clone());
    let (mut num, mut den) = (scaled.numer().clone(), scaled.denom().clone());

    let mut values = Vec::with_capacity(doublings as usize + 1);
    let mut scale = 1.0f64;
    values.push(naive_height(x));
    for k in 1..=doublings {
        let (n2, d2_) = (&num * &num, &den * &den);
        let a_z2 = &a * &d2_;
        let z3 = &d2_ * &den;
        let new_num = {
            let t = &n2 - &a_z2;
            &t * &t - Integer::from(8) * &b * &num * &z3
        };
        let new_den = Integer::from(4) * &den * (&n2 * &num + &a_z2 * &num + &b * &z3);
        if new_den.is_zero() {
            return Ok(torsion_estimate());
        }
        let g = new_num.gcd(&new_den);
        num = new_num / &g;
        den = new_den / &g;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        // back to the caller's model: x = num / (den d^2)
        let g2 = num.gcd(&d2);
        let (orig_num, orig_den) = (&num / &g2, &den * (&d2 / &g2));
        scale *= 4.0;
        let h = if orig_num.abs() >= orig_den {
            if orig_num.is_zero() {
                0.0
            } else {
                ln_abs(&orig_num)
            }
        } else {
            ln_abs(&orig_den)
        };
        values.push(h / scale);
        debug_assert_eq!(values.len(), k as usize + 1);
    }
    let n = doublings as usize;
    let value = values[n];
    let error_radius = (values[n] - values[n - 1]).abs();
    let iterates = (n.saturating_sub(2)..=n).map(|k| (k as u32, values[k])).collect();
    Ok(HeightEstimate { value, iterates, error_radius, torsion: false })
}

/// Approximate Gram matrix of the height pairing
/// `<P, Q> = (ĥ(P + Q) - ĥ(P) - ĥ(Q)) / 2` and its determinant.
#[derive(Clone, PartialEq, Debug)]
pub struct GramEstimate {
    pub doublings: u32,
    pub matrix: Vec<Vec<f64>>,
    pub determinant: f64,
    /// First-order propagation of the per-entry radii through the cofactors.
    pub error_radius: f64,
}

pub fn height_gram(curve: &ShortCurve, pts: &[Point], doublings: u32) -> Result<GramEstimate> {
    let n = pts.len();
    let mut jobs: Vec<(usize, usize, Point)> = Vec::new();
    for i in 0..n {
        jobs.push((i, i, pts[i].clone()));
        for j in i + 1..n {
            jobs.push((i, j, curve.add(&pts[i], &pts[j])));
        }
    }
    // every job is independent; coordinates get large enough for threads to pay off
    let results: Vec<Result<HeightEstimate>> = thread::scope(|scope| {
        let handles: Vec<_> =
            jobs.iter().map(|(_, _, p)| scope.spawn(move || canonical_height(curve, p, doublings))).collect();
        handles.into_iter().map(|h| h.join().expect("height worker panicked")).collect()
    });
    let mut single = vec![0.0; n];
    let mut single_err = vec![0.0; n];
    let mut pair = vec![vec![0.0; n]; n];
    let mut pair_err = vec![vec![0.0; n]; n];
    for ((i, j, _), est) in jobs.iter().zip(results) {
        let est = est?;
        if i == j {
            single[*i] = est.value;
            single_err[*i] = est.error_radius;
        } else {
            pair[*i][*j] = est.value;
            pair_err[*i][*j] = est.error_radius;
        }
    }
    let mut matrix = vec![vec![0.0; n]; n];
    let mut radius = vec![vec![0.0; n]; n];
    for i in 0..n {
        matrix[i][i] = single[i];
        radius[i][i] = single_err[i];
        for j in i + 1..n {
            let v = (pair[i][j] - single[i] - single[j]) / 2.0;
            let r = (pair_err[i][j] + single_err[i] + single_err[j]) / 2.0;
            matrix[i][j] = v;
            matrix[j][i] = v;
            radius[i][j] = r;
            radius[j][i] = r;
        }
    }
    let determinant = det(&matrix);
    let error_radius = radius
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, r)| (i, j, r)))
        .map(|(i, j, r)| cofactor(&matrix, i, j).abs() * r)
        .sum();
    Ok(GramEstimate { doublings, matrix, determinant, error_radius })
}

fn det(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut result = 1.0;
    for col in 0..n {
        let pivot = (col..n).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs())).expect("nonempty range");
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            result = -result;
        }
        result *= a[col][col];
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            let f = row[col] / pivot_row[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * p;
            }
        }
    }
    result
}

fn cofactor(m: &[Vec<f64>], i: usize, j: usize) -> f64 {
    let minor: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .filter(|(r, _)| *r != i)
        .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect())
        .collect();
    let sign = if (i + j).is_multiple_of(2) { 1.0 } else { -1.0 };
    if minor.is_empty() {
        return sign;
    }
    sign * det(&minor)
}
