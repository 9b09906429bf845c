//! Acceptance criteria AC1–AC12, one PASS/FAIL line each. Runs without the
//! libtest harness; the process exits non-zero when any criterion fails.

use hartogs::config::RunConfig;
use hartogs::report::VerificationReport;
use hartogs::schur::{self, ExponentPair};
use hartogs::specfun::{identity_check, HypParams, Identity};
use hartogs::suite;
use hartogs::Result;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;
use std::time::{Duration, Instant};

struct Verdict {
    passed: bool,
    summary: String,
}

fn verdict(passed: bool, summary: impl Into<String>) -> Result<Verdict> {
    Ok(Verdict { passed, summary: summary.into() })
}

fn failures(reports: &[VerificationReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{}({})", r.check_id, r.computed.re()))
        .collect()
}

fn all_pass(reports: &[VerificationReport]) -> Result<Verdict> {
    let bad = failures(reports);
    let n = reports.len();
    if bad.is_empty() {
        verdict(true, format!("{n}/{n} checks"))
    } else {
        verdict(false, format!("{}/{n} checks; failing: {}", n - bad.len(), bad.join(", ")))
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn ac1(_: &RunConfig) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let dummy = HypParams::new(1.0, 1.0, 2.0)?;
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let cases = [
            (Identity::Recurrence, rng.gen_range(0.05..60.0)),
            (Identity::Reflection, rng.gen_range(0.001..0.999)),
            (Identity::Duplication, rng.gen_range(0.05..40.0)),
        ];
        for (id, x) in cases {
            let r = identity_check(id, dummy, x, None)?;
            worst = worst.max(rel(r.computed.re(), r.reference.expect("comparison").re()));
        }
    }
    verdict(worst < 1e-11, format!("worst relative error {worst:.2e} over 3x200 random arguments (< 1e-11)"))
}

fn ac2(cfg: &RunConfig) -> Result<Verdict> {
    let reports: Vec<_> = suite::identities(cfg)?
        .into_iter()
        .filter(|r| !matches!(r.check_id.as_str(), "identity.recurrence" | "identity.reflection" | "identity.duplication"))
        .collect();
    all_pass(&reports)
}

fn ac3(cfg: &RunConfig) -> Result<Verdict> {
    let reports = suite::lemma21(cfg, None)?;
    let closed = [0.0, 0.25, 0.5, 0.81]
        .iter()
        .map(|&r2| Ok(rel(schur::torus_identity_check(1.0, r2, suite::TORUS_NODES)?.computed.re(), 1.0 / (1.0 - r2))))
        .collect::<Result<Vec<f64>>>()?;
    let closed_ok = closed.iter().all(|&e| e < 1e-8);
    let v = all_pass(&reports)?;
    verdict(v.passed && closed_ok && reports.len() == 12, format!("{}; a = 1 closed case within 1e-8: {closed_ok}", v.summary))
}

fn ac4(cfg: &RunConfig) -> Result<Verdict> {
    let mut cfg = cfg.clone();
    cfg.depth = Some(8);
    let reports = suite::lemma22(&cfg, None)?;
    let sups: Vec<String> = reports
        .iter()
        .filter(|r| r.check_id == "lemma2.2.sup")
        .map(|r| format!("{:.4}/{:.4}", r.computed.re(), r.reference.unwrap().re()))
        .collect();
    let v = all_pass(&reports)?;
    verdict(v.passed, format!("{}; sup/closed {}", v.summary, sups.join(" ")))
}

fn ac5(cfg: &RunConfig) -> Result<Verdict> {
    let mut cfg = cfg.clone();
    cfg.depth = Some(8);
    let reports = suite::lemma23(&cfg, None)?;
    let sups: Vec<String> = reports
        .iter()
        .filter(|r| r.check_id == "lemma2.3.sup")
        .map(|r| format!("{:.4}/{:.4}", r.computed.re(), r.reference.unwrap().re()))
        .collect();
    let v = all_pass(&reports)?;
    verdict(v.passed, format!("{}; sup/constant {}", v.summary, sups.join(" ")))
}

fn ac6(cfg: &RunConfig) -> Result<Verdict> {
    all_pass(&suite::lemma24(cfg)?)
}

fn ac7(cfg: &RunConfig) -> Result<Verdict> {
    let reports = suite::lemma25(cfg, None)?;
    let v = all_pass(&reports)?;
    let growth: Vec<String> = reports
        .iter()
        .filter(|r| r.check_id == "lemma2.5.sup")
        .map(|r| format!("p={}: {:.1}%", r.inputs.iter().find(|(k, _)| k == "p").map_or(0.0, |x| x.1), 100.0 * r.computed.re()))
        .collect();
    verdict(v.passed, format!("{}; sup growth over last three refinements {}", v.summary, growth.join(", ")))
}

fn ac8(cfg: &RunConfig) -> Result<Verdict> {
    all_pass(&suite::project(cfg, None)?)
}

fn ac9(_: &RunConfig) -> Result<Verdict> {
    let e = ExponentPair::new(3.0)?;
    let lower = schur::lower_bound(e)?;
    let upper = schur::upper_bound(e)?;
    let lower_ok = (lower - 4.0 * PI * PI / 27.0).abs() < 1e-6;
    let upper_ok = (upper - 13.1594725).abs() < 1e-6 && (upper - 4.0 * PI * PI / 3.0).abs() < 1e-6;
    let mut rng = StdRng::seed_from_u64(9);
    let mut sym: f64 = 0.0;
    let mut ordered = true;
    for _ in 0..100 {
        let p: f64 = rng.gen_range(4.0 / 3.0 + 1e-9..4.0 - 1e-9);
        if (p - 2.0).abs() < 1e-9 {
            continue;
        }
        let e = ExponentPair::new(p)?;
        let c = e.conjugate();
        sym = sym.max(rel(schur::lower_bound(e)?, schur::lower_bound(c)?));
        sym = sym.max(rel(schur::upper_bound(e)?, schur::upper_bound(c)?));
        ordered &= schur::lower_bound(e)? < schur::upper_bound(e)?;
    }
    let p2 = schur::bounds_table(&[2.0])?[0];
    let p2_ok = p2.upper.is_none() && p2.exact_norm == Some(1.0) && (p2.lower - 1.0).abs() < 1e-15;
    verdict(
        lower_ok && upper_ok && sym < 1e-13 && ordered && p2_ok,
        format!("lower(3) = {lower:.7}, upper(3) = {upper:.7}, symmetry {sym:.1e}, ordered on 100 p: {ordered}, p = 2 exact: {p2_ok}"),
    )
}

fn ac10(cfg: &RunConfig) -> Result<Verdict> {
    let mut cfg = cfg.clone();
    cfg.depth = Some(6);
    let r3 = suite::lower_estimate(&cfg, 3.0)?.remove(0);
    let r2 = suite::lower_estimate(&cfg, 2.0)?.remove(0);
    let ratios = r3.get_detail("ratios").expect("ratios");
    let shown: Vec<String> = ratios.iter().map(|x| format!("{x:.4}")).collect();
    verdict(
        r3.passed && r2.passed,
        format!("p = 3 ratios [{}] vs {:.7}; p = 2 final {:.12}", shown.join(", "), r3.reference.unwrap().re(), r2.computed.re()),
    )
}

fn ac11(cfg: &RunConfig) -> Result<Verdict> {
    let mut cfg = cfg.clone();
    cfg.depth = Some(7);
    let reports: Vec<_> = suite::remainder(&cfg, 3.0)?
        .into_iter()
        .filter(|r| matches!(r.check_id.as_str(), "lower.remainder" | "lower.remainder_trend"))
        .collect();
    let trend = reports.iter().find(|r| r.check_id == "lower.remainder_trend").expect("trend report");
    let v = all_pass(&reports)?;
    verdict(v.passed, format!("{}; worst final/initial {:.3} (< 0.5)", v.summary, trend.computed.re()))
}

fn ac12(cfg: &RunConfig) -> Result<Verdict> {
    let reports = suite::premises(cfg, &[2.5, 3.0])?;
    let v = all_pass(&reports)?;
    let notes: Vec<String> = reports.iter().filter_map(|r| r.note.clone()).collect();
    verdict(v.passed, format!("{}; {}", v.summary, notes.join("; ")))
}

type Criterion = (&'static str, &'static str, fn(&RunConfig) -> Result<Verdict>, Duration);

fn main() {
    let cfg = RunConfig::default();
    let secs = Duration::from_secs;
    let criteria: [Criterion; 12] = [
        ("AC1", "gamma identities", ac1, secs(1)),
        ("AC2", "hypergeometric identities", ac2, secs(10)),
        ("AC3", "torus integral", ac3, secs(5)),
        ("AC4", "weighted disk supremum", ac4, secs(60)),
        ("AC5", "Schur integral", ac5, secs(300)),
        ("AC6", "double-factor series", ac6, secs(30)),
        ("AC7", "projection decomposition", ac7, secs(60)),
        ("AC8", "reproducing property", ac8, secs(120)),
        ("AC9", "bound arithmetic", ac9, secs(1)),
        ("AC10", "lower-bound ratio", ac10, secs(600)),
        ("AC11", "remainder trend", ac11, secs(600)),
        ("AC12", "Schur premises", ac12, secs(600)),
    ];
    let mut failed = 0;
    for (id, name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run(&cfg);
        let elapsed = start.elapsed();
        let (passed, summary) = match outcome {
            Ok(v) => (v.passed, v.summary),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = elapsed <= budget;
        let ok = passed && in_time;
        failed += !ok as usize;
        println!(
            "{} {id}: {name}: {summary} [{:.2}s of {}s{}]",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            if in_time { "" } else { ", over budget" }
        );
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
