use std::io::Write;
use std::path::{Path, PathBuf};

use cubeseq::arith::sqrt_exact;
use cubeseq::certify::{independence_bounded, recheck_family};
use cubeseq::construction::{quartic_from, Family};
use cubeseq::{Error, Rational};

use crate::document::{rat_from_str, CertificateDocument, FamilyPayload, IndependenceRecord, Payload};
use crate::reproduce::published_fixture;
use crate::CliError;

#[derive(Clone, Debug, Default)]
pub struct GenerateArgs {
    pub c0: Option<String>,
    pub v0: Option<String>,
    pub u0: Option<String>,
    pub t0: Option<String>,
    /// Empty means `[1]`.
    pub j: Vec<i64>,
    /// Relation-search bound; 0 skips the search.
    pub bound: u32,
    /// Output directory.
    pub out: PathBuf,
}

fn pipeline(context: &str, e: Error) -> CliError {
    match e {
        Error::ZeroMultiplier => CliError::Input(format!("{context}: {e}")),
        _ => CliError::Pipeline(format!("{context}: {e}")),
    }
}

/// Seed resolution: explicit `(u0, t0)`; `u0` alone with `t0 = +sqrt(q(u0))`;
/// or nothing, which is only allowed for the default `(c0, v0)`.
fn resolve_seed(args: &GenerateArgs, c0: &Rational, v0: &Rational) -> Result<(Rational, Rational), CliError> {
    let published = published_fixture();
    match (&args.u0, &args.t0) {
        (Some(u), Some(t)) => Ok((rat_from_str("u0", u)?, rat_from_str("t0", t)?)),
        (Some(u), None) => {
            let u = rat_from_str("u0", u)?;
            let q = quartic_from(c0, v0).map_err(|e| pipeline("quartic", e))?;
            match sqrt_exact(&q.eval(&u)) {
                Ok(Some(t)) => Ok((u, t)),
                _ => Err(CliError::Input("u0 does not give a rational point on the quartic; pass --t0".into())),
            }
        }
        (None, Some(_)) => Err(CliError::Input("--t0 requires --u0".into())),
        (None, None) => {
            let is_default = c0 == &rat_from_str("c0", &published.c0)? && v0 == &rat_from_str("v0", &published.v0)?;
            if !is_default {
                return Err(CliError::Input(
                    "a seed (--u0, optionally --t0) is required for non-default c0, v0".into(),
                ));
            }
            Ok((rat_from_str("u0", &published.seed[0])?, rat_from_str("t0", &published.seed[1])?))
        }
    }
}

fn build(family: &Family, seed: (&Rational, &Rational), j: i64, bound: u32) -> Result<CertificateDocument, CliError> {
    let ctx = |stage: &str| format!("j = {j}, {stage}");
    let mut cert = family.member(j).map_err(|e| pipeline(&ctx("member"), e))?;
    let independence = if bound > 0 {
        let report =
            independence_bounded(&cert.curve, &cert.points, bound).map_err(|e| pipeline(&ctx("independence"), e))?;
        cert.independence_bound_checked = bound;
        Some(IndependenceRecord::from(&report))
    } else {
        None
    };
    let verdict = recheck_family(&cert);
    if !verdict.is_valid() {
        return Err(CliError::Invalid(format!("{}: {verdict:?}", ctx("verify"))));
    }
    Ok(CertificateDocument::new(Payload::FamilyMember(FamilyPayload::from_certificate(
        &cert,
        Some(seed),
        independence,
    ))))
}

pub fn file_name(j: i64) -> String {
    format!("member_j{j}.json")
}

/// Builds and verifies every requested member, then writes them all. Nothing
/// is written unless every member succeeds; each file is written through a
/// temporary file and renamed into place.
pub fn generate(args: &GenerateArgs) -> Result<Vec<PathBuf>, CliError> {
    let c0 = rat_from_str("c0", args.c0.as_deref().unwrap_or("3"))?;
    let v0 = rat_from_str("v0", args.v0.as_deref().unwrap_or("3094/5795"))?;
    let (u0, t0) = resolve_seed(args, &c0, &v0)?;
    let family = Family::new(&c0, &v0, &u0, &t0).map_err(|e| match e {
        Error::NotOnCurve => CliError::Input("seed (u0, t0) is not on the quartic".into()),
        e => pipeline("seed", e),
    })?;

    let mut js = if args.j.is_empty() { vec![1] } else { args.j.clone() };
    js.sort_unstable();
    js.dedup();
    let (family, seed) = (&family, (&u0, &t0));
    let docs: Vec<(i64, Result<CertificateDocument, CliError>)> = std::thread::scope(|s| {
        let handles: Vec<_> = js.iter().map(|&j| (j, s.spawn(move || build(family, seed, j, args.bound)))).collect();
        handles.into_iter().map(|(j, h)| (j, h.join().expect("generation thread panicked"))).collect()
    });
    let docs = docs.into_iter().map(|(j, d)| d.map(|d| (j, d))).collect::<Result<Vec<_>, _>>()?;

    write_all(&args.out, &docs)
}

fn io(path: &Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

fn write_all(dir: &Path, docs: &[(i64, CertificateDocument)]) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let mut staged = Vec::with_capacity(docs.len());
    for (j, doc) in docs {
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io(dir, e))?;
        tmp.write_all(doc.to_json().as_bytes()).map_err(|e| io(tmp.path(), e))?;
        #[cfg(unix)]
        {
            use std::os::unix::fs::PermissionsExt;
            let mode = std::fs::Permissions::from_mode(0o644);
            tmp.as_file().set_permissions(mode).map_err(|e| io(tmp.path(), e))?;
        }
        tmp.as_file().sync_all().map_err(|e| io(tmp.path(), e))?;
        staged.push((tmp, dir.join(file_name(*j))));
    }
    staged
        .into_iter()
        .map(|(tmp, path)| tmp.persist(&path).map(|_| path.clone()).map_err(|e| io(&path, e.error)))
        .collect()
}
