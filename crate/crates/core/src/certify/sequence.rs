use std::fmt;

use num_traits::Signed;

use crate::arith::cube_root_exact;
use crate::construction::{klm_from_pqr, pqrs, quartic_from, FamilyCertificate};
use crate::curves::CurvePoint;
use crate::{Cubic, Point, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FailureReason {
    PointAtInfinity,
    NonConsecutiveCube,
    OffCurve,
    /// The certificate's curve differs from the one rebuilt from its
    /// parameters.
    CurveMismatch,
    /// `u_j` does not give a rational point on the quartic.
    SeedNotOnQuartic,
    /// The parameters no longer pass through the pipeline.
    PipelineRejected,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FailureReason::PointAtInfinity => "point at infinity",
            FailureReason::NonConsecutiveCube => "x-coordinate is not the next consecutive cube",
            FailureReason::OffCurve => "point is not on the curve",
            FailureReason::CurveMismatch => "curve does not match the one rebuilt from c0, v0, u_j",
            FailureReason::SeedNotOnQuartic => "u_j does not give a square on the quartic",
            FailureReason::PipelineRejected => "parameters are rejected by the pipeline",
        };
        f.write_str(s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Valid,
    Invalid { index: usize, reason: FailureReason },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SequenceCertificate {
    pub curve: Cubic,
    pub base: Rational,
    pub points: Vec<Point>,
    /// `i` such that the first point has `x = (base + i)^3`, when it has one.
    pub first_offset: Option<i64>,
    /// Number of leading points that passed every check.
    pub length: usize,
    pub verdict: Verdict,
}

/// Offset `i` with `x = (base + i)^3`, if `i` is an integer.
fn cube_offset(x: &Rational, base: &Rational) -> Option<i64> {
    let offset = cube_root_exact(x)? - base;
    if !offset.is_integer() {
        return None;
    }
    i64::try_from(offset.to_integer()).ok()
}

/// Checks that `pts` lie on `curve` with x-coordinates `(c0 + i)^3` for
/// consecutive integers `i`, reporting the first failure.
pub fn verify_sequence(curve: &Cubic, c0: &Rational, pts: &[Point]) -> SequenceCertificate {
    let mut first_offset = None;
    let mut verdict = Verdict::Valid;
    for (index, pt) in pts.iter().enumerate() {
        let CurvePoint::Affine { x, .. } = pt else {
            verdict = Verdict::Invalid { index, reason: FailureReason::PointAtInfinity };
            break;
        };
        let consecutive = match (first_offset, cube_offset(x, c0)) {
            (None, Some(o)) => {
                first_offset = Some(o);
                true
            }
            (Some(first), Some(o)) => o == first + index as i64,
            (_, None) => false,
        };
        if !consecutive {
            verdict = Verdict::Invalid { index, reason: FailureReason::NonConsecutiveCube };
            break;
        }
        if !curve.on_curve(pt) {
            verdict = Verdict::Invalid { index, reason: FailureReason::OffCurve };
            break;
        }
    }
    let length = match verdict {
        Verdict::Valid => pts.len(),
        Verdict::Invalid { index, .. } => index,
    };
    SequenceCertificate { curve: curve.clone(), base: c0.clone(), points: pts.to_vec(), first_offset, length, verdict }
}

/// Full re-check of a family certificate from its own parameters: the five
/// points form a sequence starting at `(c0 - 2)^3`, the curve is the one the
/// pipeline builds from `(c0, v0, u_j)`, and `u_j` lies on the quartic.
pub fn recheck_family(cert: &FamilyCertificate) -> Verdict {
    let seq = verify_sequence(&cert.curve, &cert.c0, &cert.points);
    if !seq.verdict.is_valid() {
        return seq.verdict;
    }
    if seq.first_offset != Some(-2) {
        return Verdict::Invalid { index: 0, reason: FailureReason::NonConsecutiveCube };
    }
    let one = Rational::from_integer(1.into());
    let rebuilt = pqrs(&cert.c0, &cert.u_j, &cert.v0, &one).and_then(|t| klm_from_pqr(&cert.c0, &t.p, &t.q, &t.r));
    match rebuilt {
        Ok(curve) if curve == cert.curve => {}
        Ok(_) => return Verdict::Invalid { index: 0, reason: FailureReason::CurveMismatch },
        Err(_) => return Verdict::Invalid { index: 0, reason: FailureReason::PipelineRejected },
    }
    let Ok(quartic) = quartic_from(&cert.c0, &cert.v0) else {
        return Verdict::Invalid { index: 0, reason: FailureReason::PipelineRejected };
    };
    let t = cert.points[0].y().expect("affine after sequence check");
    if t.is_negative() || t * t != quartic.eval(&cert.u_j) {
        return Verdict::Invalid { index: 0, reason: FailureReason::SeedNotOnQuartic };
    }
    Verdict::Valid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{int, published_curve, published_points};

    #[test]
    fn published_sequence_is_valid() {
        let cert = verify_sequence(&published_curve(), &int(3), &published_points());
        assert_eq!(cert.verdict, Verdict::Valid);
        assert_eq!(cert.length, 5);
        assert_eq!(cert.first_offset, Some(-2));
    }

    #[test]
    fn swapped_points_break_consecutiveness() {
        let mut pts = published_points();
        pts.swap(1, 2);
        let cert = verify_sequence(&published_curve(), &int(3), &pts);
        assert_eq!(cert.verdict, Verdict::Invalid { index: 1, reason: FailureReason::NonConsecutiveCube });
        assert_eq!(cert.length, 1);
    }

    #[test]
    fn perturbed_y_is_off_curve() {
        let mut pts = published_points();
        let CurvePoint::Affine { x, y } = &pts[3] else { unreachable!() };
        pts[3] = CurvePoint::affine(x.clone(), y + int(1));
        let cert = verify_sequence(&published_curve(), &int(3), &pts);
        assert_eq!(cert.verdict, Verdict::Invalid { index: 3, reason: FailureReason::OffCurve });
    }

    #[test]
    fn non_cube_and_identity() {
        let pts = vec![CurvePoint::affine(int(2), int(0))];
        let cert = verify_sequence(&published_curve(), &int(3), &pts);
        assert_eq!(cert.verdict, Verdict::Invalid { index: 0, reason: FailureReason::NonConsecutiveCube });
        let cert = verify_sequence(&published_curve(), &int(3), &[CurvePoint::Identity]);
        assert_eq!(cert.verdict, Verdict::Invalid { index: 0, reason: FailureReason::PointAtInfinity });
    }

    #[test]
    fn cube_offsets_relative_to_fractional_base() {
        let base = Rational::new(1.into(), 2.into());
        assert_eq!(cube_offset(&Rational::new(27.into(), 8.into()), &base), Some(1));
        assert_eq!(cube_offset(&Rational::new((-1).into(), 8.into()), &base), Some(-1));
        assert_eq!(cube_offset(&int(1), &base), None);
    }
}
