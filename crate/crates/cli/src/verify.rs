use cubeseq::certify::{independence_bounded, recheck_family, verify_sequence, Verdict};
use cubeseq::construction::Family;

use crate::document::{CertificateDocument, FamilyPayload, IndependenceRecord, Payload, SequencePayload};
use crate::reproduce::{render, run_fixtures};
use crate::CliError;

fn verdict_error(v: &Verdict) -> Option<CliError> {
    match v {
        Verdict::Valid => None,
        Verdict::Invalid { index, reason } => Some(CliError::Invalid(format!("invalid at index {index}: {reason}"))),
    }
}

fn verify_family(p: &FamilyPayload) -> Result<String, CliError> {
    let cert = p.to_certificate()?;
    if let Some(e) = verdict_error(&recheck_family(&cert)) {
        return Err(e);
    }
    if let Some((u0, t0)) = p.seed()? {
        let regenerated = Family::new(&cert.c0, &cert.v0, &u0, &t0)
            .and_then(|f| f.member(cert.j))
            .map_err(|e| CliError::Invalid(format!("seed no longer regenerates member j = {}: {e}", cert.j)))?;
        if regenerated.u_j != cert.u_j || regenerated.curve != cert.curve || regenerated.points != cert.points {
            return Err(CliError::Invalid(format!(
                "certificate differs from member j = {} regenerated from the seed",
                cert.j
            )));
        }
    }
    if let Some(recorded) = &p.independence {
        let report = independence_bounded(&cert.curve, &cert.points, recorded.bound)
            .map_err(|e| CliError::Invalid(format!("independence: {e}")))?;
        if &IndependenceRecord::from(&report) != recorded {
            return Err(CliError::Invalid("independence record does not match a fresh search".into()));
        }
    }
    Ok(format!("valid family_member j = {}", cert.j))
}

fn verify_seq(p: &SequencePayload) -> Result<String, CliError> {
    let (c0, curve, points) = p.values()?;
    let cert = verify_sequence(&curve, &c0, &points);
    match verdict_error(&cert.verdict) {
        Some(e) => Err(e),
        None => Ok(format!(
            "valid sequence of {} consecutive cubes from offset {}",
            cert.length,
            cert.first_offset.map_or("-".into(), |o| o.to_string())
        )),
    }
}

/// Re-runs every exact check the document's kind carries. `Ok` holds a
/// human-readable summary.
pub fn verify_document(doc: &CertificateDocument) -> Result<String, CliError> {
    let doc = doc.canonicalize()?;
    match &doc.body {
        Payload::FamilyMember(p) => verify_family(p),
        Payload::Sequence(p) => verify_seq(p),
        Payload::ReproductionReport(p) => {
            let rows = run_fixtures(p)?;
            let table = render(&rows);
            if rows.iter().all(|r| r.passed()) {
                Ok(table)
            } else {
                Err(CliError::Invalid(table))
            }
        }
    }
}

pub fn verify_text(text: &str) -> Result<String, CliError> {
    verify_document(&CertificateDocument::from_json(text)?)
}
