//! The reproduction suite: recompute every published constant from the
//! fixture's inputs and compare exactly.

use std::fmt::Write;

use cubeseq::certify::{independence_bounded, verify_sequence};
use cubeseq::construction::{family_member, quartic_from, quartic_to_weierstrass};
use cubeseq::curves::CurvePoint;
use cubeseq::{Error, Point, Rational};

use crate::document::{rat_from_str, rat_to_string, CertificateDocument, IndependenceRecord, Payload, ReportPayload};
use crate::CliError;

/// The published constants, shipped with the binary.
pub const PUBLISHED_FIXTURE: &str = include_str!("../fixtures/published.json");

pub fn published_fixture() -> ReportPayload {
    match CertificateDocument::from_json(PUBLISHED_FIXTURE).map(|d| d.body) {
        Ok(Payload::ReproductionReport(p)) => *p,
        _ => unreachable!("embedded fixture is a reproduction_report"),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Row {
    pub name: String,
    /// `Err` holds a one-line explanation of the mismatch.
    pub outcome: Result<(), String>,
}

impl Row {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

fn short(s: &str) -> String {
    const MAX: usize = 60;
    if s.len() <= MAX {
        s.to_string()
    } else {
        format!("{}...({} chars)", &s[..MAX], s.len())
    }
}

fn compare_rat(name: &str, expected: &str, got: Result<&Rational, &Error>) -> Row {
    let outcome = match (rat_from_str(name, expected), got) {
        (Err(e), _) => Err(format!("unparseable expected value: {e}")),
        (_, Err(e)) => Err(format!("pipeline error: {e}")),
        (Ok(want), Ok(got)) if &want == got => Ok(()),
        (Ok(want), Ok(got)) => {
            Err(format!("expected {} got {}", short(&rat_to_string(&want)), short(&rat_to_string(got))))
        }
    };
    Row { name: name.to_string(), outcome }
}

fn compare_point(name: &str, expected: &[String; 2], got: Result<&Point, &Error>) -> Row {
    let got = got.map(|p| match p {
        CurvePoint::Affine { x, y } => (Some(x), Some(y)),
        CurvePoint::Identity => (None, None),
    });
    let x = compare_rat(&format!("{name}.x"), &expected[0], got.and_then(|(x, _)| x.ok_or(&Error::UnsupportedPoint)));
    let y = compare_rat(&format!("{name}.y"), &expected[1], got.and_then(|(_, y)| y.ok_or(&Error::UnsupportedPoint)));
    let outcome = x.outcome.and(y.outcome);
    Row { name: name.to_string(), outcome }
}

fn check(name: &str, ok: bool, why: impl FnOnce() -> String) -> Row {
    Row { name: name.to_string(), outcome: if ok { Ok(()) } else { Err(why()) } }
}

fn failed(name: &str, e: &Error) -> Row {
    Row { name: name.to_string(), outcome: Err(format!("pipeline error: {e}")) }
}

/// Runs every fixture. Inputs that fail to parse are an input error; every
/// other problem becomes a failing row.
pub fn run_fixtures(fx: &ReportPayload) -> Result<Vec<Row>, CliError> {
    let c0 = rat_from_str("c0", &fx.c0)?;
    let v0 = rat_from_str("v0", &fx.v0)?;
    let (u0, t0) = (rat_from_str("seed.u0", &fx.seed[0])?, rat_from_str("seed.t0", &fx.seed[1])?);
    let mut rows = Vec::new();

    let quartic = quartic_from(&c0, &v0);
    let q = &fx.quartic;
    for (i, (name, want)) in
        [("P", &q.P), ("N", &q.N), ("M", &q.M), ("L", &q.L), ("K", &q.K)].into_iter().enumerate().rev()
    {
        rows.push(compare_rat(&format!("quartic.{name}"), want, quartic.as_ref().map(|qc| qc.coeff(i))));
    }
    rows.push(match &quartic {
        Ok(qc) => check("quartic_point", &t0 * &t0 == qc.eval(&u0), || "t0^2 != q(u0)".into()),
        Err(e) => failed("quartic_point", e),
    });

    let reduction = quartic.as_ref().map_err(Clone::clone).and_then(quartic_to_weierstrass);
    let psi = reduction.as_ref().map(|(w, _)| w);
    rows.push(compare_rat("psi.A", &fx.psi.A, psi.map(|w| w.a())));
    rows.push(compare_rat("psi.B", &fx.psi.B, psi.map(|w| w.b())));
    rows.push(compare_point("r_tilde", &fx.r_tilde, reduction.as_ref().map(|(_, r)| r)));
    rows.push(match &reduction {
        Ok((w, r)) => {
            let inf = w.is_infinite_order(r);
            check("r_tilde.infinite_order", w.on_curve(r) && inf == fx.r_tilde_infinite_order, || {
                format!("on curve {}, infinite order {inf}", w.on_curve(r))
            })
        }
        Err(e) => failed("r_tilde.infinite_order", e),
    });

    let member = family_member(&c0, &v0, (&u0, &t0), fx.j);
    let curve = member.as_ref().map(|m| &m.curve);
    rows.push(compare_rat("curve.k", &fx.curve.k, curve.map(|c| c.cubic_coeff())));
    rows.push(compare_rat("curve.l", &fx.curve.l, curve.map(|c| c.linear_coeff())));
    rows.push(compare_rat("curve.m", &fx.curve.m, curve.map(|c| c.constant_coeff())));
    for i in 0..5 {
        let name = format!("points[{i}]");
        let expected = match fx.points.get(i).map(|p| p.to_point(i)) {
            Some(Ok(CurvePoint::Affine { x, y })) => [rat_to_string(&x), rat_to_string(&y)],
            _ => {
                rows.push(check(&name, false, || "missing or non-affine expected point".into()));
                continue;
            }
        };
        let mut row = compare_point(&name, &expected, member.as_ref().map(|m| &m.points[i]));
        if let (Ok(()), Ok(m)) = (&row.outcome, &member) {
            if !m.curve.on_curve(&m.points[i]) {
                row.outcome = Err("not on the curve".into());
            }
        }
        rows.push(row);
    }

    rows.push(match &member {
        Ok(m) => {
            let seq = verify_sequence(&m.curve, &c0, &m.points);
            check(
                "sequence",
                seq.verdict.is_valid() && seq.first_offset == Some(fx.first_offset) && seq.length == fx.sequence_length,
                || format!("verdict {:?}, offset {:?}, length {}", seq.verdict, seq.first_offset, seq.length),
            )
        }
        Err(e) => failed("sequence", e),
    });

    let expected = &fx.independence;
    rows.push(match &member {
        Ok(m) => match independence_bounded(&m.curve, &m.points, expected.bound) {
            Ok(report) => {
                let got = IndependenceRecord::from(&report);
                check("independence", &got == expected, || {
                    format!("relation {:?}, torsion flags {:?}", got.relation, got.torsion_flags)
                })
            }
            Err(e) => failed("independence", &e),
        },
        Err(e) => failed("independence", e),
    });
    Ok(rows)
}

pub fn render(rows: &[Row]) -> String {
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        match &r.outcome {
            Ok(()) => writeln!(out, "PASS  {}", r.name),
            Err(why) => writeln!(out, "FAIL  {:width$}  {why}", r.name),
        }
        .expect("writing to a String");
    }
    let passed = rows.iter().filter(|r| r.passed()).count();
    writeln!(out, "{passed}/{} fixtures passed", rows.len()).expect("writing to a String");
    out
}
