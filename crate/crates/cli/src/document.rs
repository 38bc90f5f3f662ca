//! Certificate JSON documents.
//!
//! Every rational is a string `"n/d"` (or `"n"` when `d = 1`). Parsing
//! accepts any equivalent spelling and canonicalizes; serialization always
//! writes the canonical form.

use serde::{Deserialize, Serialize};

use cubeseq::arith::{format_rational, parse_rational};
use cubeseq::certify::IndependenceReport;
use cubeseq::construction::FamilyCertificate;
use cubeseq::curves::{CubicCurve, CurvePoint};
use cubeseq::{Cubic, Point, Rational};

use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

pub fn generated_by() -> String {
    format!("cubeseq {}", env!("CARGO_PKG_VERSION"))
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema_version: String,
    #[serde(flatten)]
    pub body: Payload,
    pub generated_by: String,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum Payload {
    FamilyMember(FamilyPayload),
    Sequence(SequencePayload),
    ReproductionReport(Box<ReportPayload>),
}

impl CertificateDocument {
    pub fn new(body: Payload) -> Self {
        CertificateDocument { schema_version: SCHEMA_VERSION.into(), body, generated_by: generated_by() }
    }

    pub fn kind(&self) -> &'static str {
        match self.body {
            Payload::FamilyMember(_) => "family_member",
            Payload::Sequence(_) => "sequence",
            Payload::ReproductionReport(_) => "reproduction_report",
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: Self =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed certificate: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::Input(format!("unsupported schema_version {:?}", doc.schema_version)));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    /// Re-parses every rational and writes it back in canonical form.
    pub fn canonicalize(&self) -> Result<Self, CliError> {
        let body = match &self.body {
            Payload::FamilyMember(p) => Payload::FamilyMember(FamilyPayload::from_certificate(
                &p.to_certificate()?,
                p.seed()?.as_ref().map(|(u, t)| (u, t)),
                p.independence.clone(),
            )),
            Payload::Sequence(p) => {
                let (c0, curve, points) = p.values()?;
                Payload::Sequence(SequencePayload::new(&c0, &curve, &points))
            }
            Payload::ReproductionReport(p) => Payload::ReproductionReport(Box::new(p.canonical()?)),
        };
        Ok(CertificateDocument { body, ..self.clone() })
    }
}

pub fn rat_to_string(q: &Rational) -> String {
    format_rational(q)
}

pub fn rat_from_str(field: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Input(format!("{field}: {e}")))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CurveRecord {
    pub k: String,
    pub l: String,
    pub m: String,
}

impl CurveRecord {
    pub fn new(curve: &Cubic) -> Self {
        CurveRecord {
            k: rat_to_string(curve.cubic_coeff()),
            l: rat_to_string(curve.linear_coeff()),
            m: rat_to_string(curve.constant_coeff()),
        }
    }

    pub fn values(&self) -> Result<[Rational; 3], CliError> {
        Ok([rat_from_str("curve.k", &self.k)?, rat_from_str("curve.l", &self.l)?, rat_from_str("curve.m", &self.m)?])
    }

    /// A singular or degenerate curve is a verification failure, not a
    /// parse error.
    pub fn to_curve(&self) -> Result<Cubic, CliError> {
        let [k, l, m] = self.values()?;
        CubicCurve::new(k, l, m).map_err(|e| CliError::Invalid(format!("curve: {e}")))
    }
}

/// `[x, y]` or `"O"`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointRecord {
    Affine([String; 2]),
    Identity(String),
}

impl PointRecord {
    pub fn new(pt: &Point) -> Self {
        match pt {
            CurvePoint::Identity => PointRecord::Identity("O".into()),
            CurvePoint::Affine { x, y } => PointRecord::Affine([rat_to_string(x), rat_to_string(y)]),
        }
    }

    pub fn to_point(&self, index: usize) -> Result<Point, CliError> {
        match self {
            PointRecord::Identity(s) if s == "O" => Ok(CurvePoint::Identity),
            PointRecord::Identity(s) => Err(CliError::Input(format!("points[{index}]: expected \"O\", got {s:?}"))),
            PointRecord::Affine([x, y]) => Ok(CurvePoint::affine(
                rat_from_str(&format!("points[{index}].x"), x)?,
                rat_from_str(&format!("points[{index}].y"), y)?,
            )),
        }
    }
}

fn points_from(records: &[PointRecord]) -> Result<Vec<Point>, CliError> {
    records.iter().enumerate().map(|(i, r)| r.to_point(i)).collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IndependenceRecord {
    pub bound: u32,
    pub relation: Option<Vec<i64>>,
    pub torsion_flags: Vec<bool>,
}

impl From<&IndependenceReport> for IndependenceRecord {
    fn from(r: &IndependenceReport) -> Self {
        IndependenceRecord { bound: r.bound, relation: r.relation.clone(), torsion_flags: r.torsion_flags.clone() }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FamilyPayload {
    pub c0: String,
    pub v0: String,
    /// Seed `(u0, t0)` on the quartic; lets `verify` regenerate the member.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<[String; 2]>,
    pub j: i64,
    pub u_j: String,
    pub curve: CurveRecord,
    /// x = (c0 + i)^3 for i = -2..=2.
    pub points: Vec<PointRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independence: Option<IndependenceRecord>,
}

impl FamilyPayload {
    pub fn from_certificate(
        cert: &FamilyCertificate,
        seed: Option<(&Rational, &Rational)>,
        independence: Option<IndependenceRecord>,
    ) -> Self {
        FamilyPayload {
            c0: rat_to_string(&cert.c0),
            v0: rat_to_string(&cert.v0),
            seed: seed.map(|(u, t)| [rat_to_string(u), rat_to_string(t)]),
            j: cert.j,
            u_j: rat_to_string(&cert.u_j),
            curve: CurveRecord::new(&cert.curve),
            points: cert.points.iter().map(PointRecord::new).collect(),
            independence,
        }
    }

    pub fn seed(&self) -> Result<Option<(Rational, Rational)>, CliError> {
        self.seed.as_ref().map(|[u, t]| Ok((rat_from_str("seed.u0", u)?, rat_from_str("seed.t0", t)?))).transpose()
    }

    pub fn to_certificate(&self) -> Result<FamilyCertificate, CliError> {
        let points: [Point; 5] = points_from(&self.points)?
            .try_into()
            .map_err(|v: Vec<Point>| CliError::Input(format!("expected 5 points, got {}", v.len())))?;
        Ok(FamilyCertificate {
            c0: rat_from_str("c0", &self.c0)?,
            v0: rat_from_str("v0", &self.v0)?,
            j: self.j,
            u_j: rat_from_str("u_j", &self.u_j)?,
            curve: self.curve.to_curve()?,
            points,
            independence_bound_checked: self.independence.as_ref().map_or(0, |r| r.bound),
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SequencePayload {
    /// Cube base; point `i` must have x = (c0 + first_offset + i)^3.
    pub c0: String,
    pub curve: CurveRecord,
    pub points: Vec<PointRecord>,
}

impl SequencePayload {
    pub fn new(c0: &Rational, curve: &Cubic, points: &[Point]) -> Self {
        SequencePayload {
            c0: rat_to_string(c0),
            curve: CurveRecord::new(curve),
            points: points.iter().map(PointRecord::new).collect(),
        }
    }

    pub fn values(&self) -> Result<(Rational, Cubic, Vec<Point>), CliError> {
        let c0 = rat_from_str("c0", &self.c0)?;
        let points = points_from(&self.points)?;
        Ok((c0, self.curve.to_curve()?, points))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct QuarticRecord {
    pub K: String,
    pub L: String,
    pub M: String,
    pub N: String,
    pub P: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct ShortRecord {
    pub A: String,
    pub B: String,
}

/// Expected values for the reproduction suite. The inputs `c0`, `v0` and
/// `seed` drive the computation; everything else is compared against it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportPayload {
    pub c0: String,
    pub v0: String,
    pub seed: [String; 2],
    pub quartic: QuarticRecord,
    pub psi: ShortRecord,
    pub r_tilde: [String; 2],
    pub r_tilde_infinite_order: bool,
    pub j: i64,
    pub curve: CurveRecord,
    pub points: Vec<PointRecord>,
    pub first_offset: i64,
    pub sequence_length: usize,
    pub independence: IndependenceRecord,
}

impl ReportPayload {
    fn canonical(&self) -> Result<Self, CliError> {
        let c = |field: &str, s: &String| rat_from_str(field, s).map(|q| rat_to_string(&q));
        let q = &self.quartic;
        Ok(ReportPayload {
            c0: c("c0", &self.c0)?,
            v0: c("v0", &self.v0)?,
            seed: [c("seed.u0", &self.seed[0])?, c("seed.t0", &self.seed[1])?],
            quartic: QuarticRecord {
                K: c("quartic.K", &q.K)?,
                L: c("quartic.L", &q.L)?,
                M: c("quartic.M", &q.M)?,
                N: c("quartic.N", &q.N)?,
                P: c("quartic.P", &q.P)?,
            },
            psi: ShortRecord { A: c("psi.A", &self.psi.A)?, B: c("psi.B", &self.psi.B)? },
            r_tilde: [c("r_tilde.x", &self.r_tilde[0])?, c("r_tilde.y", &self.r_tilde[1])?],
            curve: CurveRecord {
                k: c("curve.k", &self.curve.k)?,
                l: c("curve.l", &self.curve.l)?,
                m: c("curve.m", &self.curve.m)?,
            },
            points: points_from(&self.points)?.iter().map(PointRecord::new).collect(),
            ..self.clone()
        })
    }
}
