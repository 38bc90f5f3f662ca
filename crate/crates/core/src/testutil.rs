//! Fixtures shared by the unit tests.

use crate::arith::{make_rational, parse_rational};
use crate::curves::{CubicCurve, CurvePoint, QuarticCurve, ShortWCurve};
use crate::{Cubic, Point, Quartic, Rational, ShortCurve};

pub fn int(n: i64) -> Rational {
    make_rational(n, 1).unwrap()
}

pub fn rat(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

pub fn published_curve() -> Cubic {
    CubicCurve::new(
        rat("1019317647604532728704/50501152925375"),
        rat("170640863010859366860672/2657955417125"),
        rat("5018469623203840351296469056/16917886230000625"),
    )
    .unwrap()
}

pub const PUBLISHED_Y: [&str; 5] = [
    "78134116669224/130068775",
    "117823324221624/130068775",
    "202645347682344/130068775",
    "405025200935544/130068775",
    "898732973533416/130068775",
];

/// The five published points, x = 1, 8, 27, 64, 125.
pub fn published_points() -> Vec<Point> {
    (1..=5).zip(PUBLISHED_Y).map(|(i, y)| CurvePoint::affine(int(i * i * i), rat(y))).collect()
}

pub fn published_quartic() -> Quartic {
    QuarticCurve::new(
        [
            rat("478172417894196583574016/303077775625"),
            rat("19793578415844699648/550525"),
            rat("-782109496219903488/9025"),
            int(0),
            int(63404527588416),
        ],
        int(7962696),
    )
    .unwrap()
}

pub fn published_seed() -> Point {
    CurvePoint::affine(rat("60547/77653"), rat("78134116669224/130068775"))
}

/// Short curve through two integral points, when that curve is nonsingular.
pub fn curve_through(p: (i64, i64), q: (i64, i64)) -> Option<(ShortCurve, Point, Point)> {
    let (x1, y1) = (int(p.0), int(p.1));
    let (x2, y2) = (int(q.0), int(q.1));
    let a = (&y1 * &y1 - &y2 * &y2 - &x1 * &x1 * &x1 + &x2 * &x2 * &x2) / (&x1 - &x2);
    let b = &y1 * &y1 - &x1 * &x1 * &x1 - &a * &x1;
    let w = ShortWCurve::new(a, b).ok()?;
    Some((w, CurvePoint::affine(x1, y1), CurvePoint::affine(x2, y2)))
}
