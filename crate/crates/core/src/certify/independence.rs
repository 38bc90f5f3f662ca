use std::collections::HashMap;

use super::GramEstimate;
use crate::error::{Error, Result};
use crate::{Cubic, Point, ShortCurve};

/// Coefficient bound used when the caller does not pick one.
pub const DEFAULT_RELATION_BOUND: u32 = 2;

#[derive(Clone, PartialEq, Debug)]
pub struct IndependenceReport {
    pub bound: u32,
    /// First nonzero `(a_1, ..., a_n)` with `|a_i| ≤ bound` and
    /// `Σ a_i P_i = O`, normalized so its first nonzero entry is positive.
    pub relation: Option<Vec<i64>>,
    /// `true` for points of finite order.
    pub torsion_flags: Vec<bool>,
    pub gram: Option<GramEstimate>,
}

/// `Σ coeffs[i]·pts[i]` on `curve`.
pub fn combine(curve: &ShortCurve, pts: &[Point], coeffs: &[i64]) -> Point {
    pts.iter().zip(coeffs).fold(Point::Identity, |acc, (p, &a)| curve.add(&acc, &curve.scalar_mul(a, p)))
}

fn search_key(v: &[i64]) -> (i64, Vec<i64>) {
    (v.iter().map(|a| a.abs()).sum(), v.to_vec())
}

#[cfg(test)]
/// Coefficient vectors in search order: increasing L1 norm, then
/// lexicographic, one representative per `±` pair.
fn search_vectors(n: usize, bound: u32) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = all_vectors(n, bound).into_iter().filter(|v| is_normalized(v)).collect();
    out.sort_by_key(|v| search_key(v));
    out
}

fn is_normalized(v: &[i64]) -> bool {
    v.iter().find(|&&a| a != 0).is_some_and(|&a| a > 0)
}

#[cfg(test)]
fn all_vectors(n: usize, bound: u32) -> Vec<Vec<i64>> {
    let b = bound as i64;
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-b..=b).map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every `(v, Σ v_i·P_i)` for `v` in `[-bound, bound]^n`, where
/// `multiples[i][a + bound] = a·P_i`.
fn partial_sums(curve: &ShortCurve, multiples: &[Vec<Point>], bound: u32) -> Vec<(Vec<i64>, Point)> {
    let b = bound as i64;
    let mut out = vec![(Vec::new(), Point::Identity)];
    for row in multiples {
        out = out
            .into_iter()
            .flat_map(|(prefix, sum)| {
                (-b..=b).map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    (v, curve.add(&sum, &row[(a + b) as usize]))
                })
            })
            .collect();
    }
    out
}

/// Searches for a small integer relation among points of `curve`, working on
/// its short model, and flags torsion points.
///
/// The search splits the points in two halves and matches `left = -right`
/// sums, then reports the first matching vector in search order.
pub fn independence_bounded(curve: &Cubic, pts: &[Point], bound: u32) -> Result<IndependenceReport> {
    if !pts.iter().all(|p| curve.on_curve(p)) {
        return Err(Error::NotOnCurve);
    }
    let model = curve.to_short();
    let short = &model.curve;
    let images: Vec<Point> = pts.iter().map(|p| model.forward(p)).collect();
    let torsion_flags = images.iter().map(|p| !short.is_infinite_order(p)).collect();

    let b = bound as i64;
    let multiples: Vec<Vec<Point>> =
        images.iter().map(|p| (-b..=b).map(|a| short.scalar_mul(a, p)).collect()).collect();
    let (left_rows, right_rows) = multiples.split_at(multiples.len() / 2);
    let mut left: HashMap<Point, Vec<Vec<i64>>> = HashMap::new();
    for (v, sum) in partial_sums(short, left_rows, bound) {
        left.entry(sum).or_default().push(v);
    }
    let relation = partial_sums(short, right_rows, bound)
        .into_iter()
        .filter_map(|(right, sum)| left.get(&sum.negate()).map(|lefts| (right, lefts)))
        .flat_map(|(right, lefts)| lefts.iter().map(move |l| [l.as_slice(), right.as_slice()].concat()))
        .filter(|v| is_normalized(v))
        .min_by_key(|v| search_key(v));
    Ok(IndependenceReport { bound, relation, torsion_flags, gram: None })
}
