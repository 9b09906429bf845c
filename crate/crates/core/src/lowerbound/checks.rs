use super::coeffs::{gamma_product, FactorTable};
use super::path::{BoundaryPath, XiPoint};
use super::testfn::{base_rule, factor_moments, fibre_norm_exact, fibre_rule, FactorPair, NormP};
use crate::error::{Error, Result};
use crate::quadrature::QuadratureSpec;
use crate::report::VerificationReport;
use crate::schur::{lower_bound, upper_bound, ExponentPair};
use num_complex::Complex64;
use rayon::prelude::*;

/// Factor names in moment order.
pub const FACTORS: [&str; 3] = ["phi", "psi", "upsilon"];

/// The eight remainder terms `(A, B)`, `A` the `z2` factor and `B` the
/// `z1/z2` factor, with `(Φ, Φ)` excluded.
pub const REMAINDER_TERMS: [(usize, usize); 8] =
    [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)];

pub fn term_name(a: usize, b: usize) -> String {
    format!("{}.{}", FACTORS[a], FACTORS[b])
}

/// All one-disk integrals needed at one test-function parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct PointEvaluation {
    pub xi: XiPoint,
    pub p: f64,
    /// `∫|z2|^{2−p}|A|^p` for `A = Φ, Ψ, Υ, Φ+Ψ+Υ`, then `∫|z2|^{2−p}/|1−z2ξ̄2|²`.
    pub base: [f64; 5],
    /// `∫|B|^p` for `B = Φ, Ψ, Υ, Φ+Ψ+Υ`, then `∫1/|1−uμ̄|²`.
    pub fibre: [f64; 5],
    /// Exact fibre factor of `‖f_ξ‖_p^p`.
    pub fibre_exact: f64,
}

impl PointEvaluation {
    pub fn new(xi: &XiPoint, p: f64, spec: &QuadratureSpec, cap: usize) -> Result<Self> {
        let pair = FactorPair::new(xi, p, cap)?;
        let base = factor_moments(&pair.base, &base_rule(xi.xi2, p, spec)?)?;
        let fibre = factor_moments(&pair.fibre, &fibre_rule(xi.ratio(), spec)?)?;
        Ok(Self {
            xi: *xi,
            p,
            base,
            fibre,
            fibre_exact: fibre_norm_exact(xi.ratio()),
        })
    }

    pub fn norm_f(&self) -> NormP {
        NormP::from_pth(self.p, self.base[4] * self.fibre_exact)
    }

    pub fn norm_pf(&self) -> NormP {
        NormP::from_pth(self.p, self.base[3] * self.fibre[3])
    }

    /// `‖(1/z2) A(z2) B(z1/z2)‖_p / ‖f_ξ‖_p`.
    pub fn term_ratio(&self, a: usize, b: usize) -> f64 {
        (self.base[a] * self.fibre[b] / self.norm_f().pth_power).powf(1.0 / self.p)
    }

    pub fn term_norm(&self, a: usize, b: usize) -> f64 {
        (self.base[a] * self.fibre[b]).powf(1.0 / self.p)
    }

    /// `‖(1/z2)ΦΦ‖_p / (Γ²(2/p)Γ²(2/q) ‖f_ξ‖_p)`, exactly 1.
    pub fn phi_phi_identity(&self) -> Result<f64> {
        Ok(self.term_ratio(0, 0) / gamma_product(self.p)?.powi(2))
    }

    pub fn ratio(&self) -> f64 {
        self.norm_pf().norm / self.norm_f().norm
    }
}

fn evaluate_path(p: f64, path: BoundaryPath, spec: &QuadratureSpec, cap: usize) -> Result<Vec<PointEvaluation>> {
    path.points()
        .par_iter()
        .map(|xi| PointEvaluation::new(xi, p, spec, cap))
        .collect()
}

fn nondecreasing_tail(v: &[f64], n: usize) -> bool {
    let start = v.len().saturating_sub(n);
    v[start..].windows(2).all(|w| w[1] >= w[0])
}

/// `‖Pf_ξ‖_p / ‖f_ξ‖_p` along a boundary path, compared with the lower
/// bound at the deepest point.
pub fn ratio_path(p: f64, path: BoundaryPath, spec: &QuadratureSpec, cap: usize) -> Result<VerificationReport> {
    let e = ExponentPair::new(p)?;
    let evals = evaluate_path(p, path, spec, cap)?;
    let ratios: Vec<f64> = evals.iter().map(PointEvaluation::ratio).collect();
    let last = *ratios.last().expect("path has at least one point");
    let report = if p == 2.0 {
        let ok = ratios.iter().all(|r| (r - 1.0).abs() <= 1e-6);
        VerificationReport::compare("lower.ratio_path", last, 1.0, 1e-6).require(ok)
    } else {
        let upper = upper_bound(e)?;
        let below = ratios.iter().all(|&r| r <= upper * 1.01) && last < upper;
        let monotone = nondecreasing_tail(&ratios, 3);
        VerificationReport::compare("lower.ratio_path", last, lower_bound(e)?, 0.10)
            .require(below && monotone)
            .detail("monotone", vec![monotone as u8 as f64])
            .detail("below_upper", vec![below as u8 as f64])
    };
    Ok(report
        .input("p", p)
        .input("depth", path.depth as f64)
        .detail("radii", path.radii())
        .detail("ratios", ratios)
        .detail("norm_f", evals.iter().map(|v| v.norm_f().norm).collect())
        .detail("norm_pf", evals.iter().map(|v| v.norm_pf().norm).collect()))
}

/// The eight remainder ratios at one parameter, and the `Φ·Φ` identity
/// as the compared value.
pub fn remainder_terms(xi: &XiPoint, p: f64, spec: &QuadratureSpec, cap: usize) -> Result<VerificationReport> {
    let ev = PointEvaluation::new(xi, p, spec, cap)?;
    Ok(remainder_report(&ev)?.input("xi1", xi.xi1.norm()).input("xi2", xi.xi2.norm()))
}

fn remainder_report(ev: &PointEvaluation) -> Result<VerificationReport> {
    let mut r = VerificationReport::compare("lower.remainder", ev.phi_phi_identity()?, 1.0, 1e-9)
        .input("p", ev.p)
        .detail("norm_f", vec![ev.norm_f().norm]);
    for (a, b) in REMAINDER_TERMS {
        r = r.detail(term_name(a, b), vec![ev.term_ratio(a, b)]);
    }
    Ok(r)
}

/// Remainder terms along the path levels `from..=to`: every ratio must
/// decrease and end below half its first value, and the `ΨΨ`, `ΥΥ` norms
/// must vary by less than 10% after the first level. Returns the per-level
/// reports followed by the trend and boundedness verdicts.
pub fn remainder_trend(
    p: f64,
    from: u32,
    to: u32,
    spec: &QuadratureSpec,
    cap: usize,
) -> Result<Vec<VerificationReport>> {
    if !(2..=to).contains(&from) || to > 52 {
        return Err(Error::domain(format!("levels {from}..={to} are not a valid path range")));
    }
    let levels: Vec<u32> = (from..=to).collect();
    let evals = levels
        .par_iter()
        .map(|&k| PointEvaluation::new(&BoundaryPath::point(k), p, spec, cap))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (k, ev) in levels.iter().zip(&evals) {
        out.push(remainder_report(ev)?.input("depth", *k as f64));
    }
    let lv: Vec<f64> = levels.iter().map(|&k| k as f64).collect();
    let mut worst = 0.0f64;
    let mut all_decrease = true;
    let mut trend = VerificationReport::predicate("lower.remainder_trend", 0.0, 0.5, false)
        .input("p", p)
        .input("from", from as f64)
        .input("to", to as f64)
        .detail("depths", lv.clone());
    for (a, b) in REMAINDER_TERMS {
        let seq: Vec<f64> = evals.iter().map(|e| e.term_ratio(a, b)).collect();
        all_decrease &= seq.windows(2).all(|w| w[1] < w[0]);
        worst = worst.max(seq[seq.len() - 1] / seq[0]);
        trend = trend.detail(term_name(a, b), seq);
    }
    trend.computed = worst.into();
    trend.passed = all_decrease && worst < 0.5;
    out.push(trend);

    let mut variation = 0.0f64;
    let mut bounded = VerificationReport::predicate("lower.remainder_bounded", 0.0, 0.10, false)
        .input("p", p)
        .detail("depths", lv);
    for (a, b) in [(1, 1), (2, 2)] {
        let seq: Vec<f64> = evals.iter().map(|e| e.term_norm(a, b)).collect();
        let (lo, hi) = seq.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &v| (l.min(v), h.max(v)));
        variation = variation.max(hi / lo - 1.0);
        bounded = bounded.detail(format!("norm.{}", term_name(a, b)), seq);
    }
    bounded.computed = variation.into();
    bounded.passed = variation < 0.10;
    out.push(bounded);
    Ok(out)
}

/// `∫|Ψ_ξ|^p dν` and `∫|Υ_ξ|^p dν` over moduli `|ξ|`: bounded iff the running
/// maximum grows by less than 5% over the last three refinements, i.e.
/// from the fourth-to-last grid point to the last.
pub fn lemma25_sup_check(p: f64, moduli: &[f64], spec: &QuadratureSpec, cap: usize) -> Result<VerificationReport> {
    if moduli.is_empty() || moduli.iter().any(|m| !(0.0..1.0).contains(m)) {
        return Err(Error::domain("moduli must be a nonempty subset of [0, 1)"));
    }
    let vals = moduli
        .par_iter()
        .map(|&m| {
            let xi = Complex64::new(m, 0.0);
            let table = FactorTable::new(p, xi, cap)?;
            let mo = factor_moments(&table, &fibre_rule(xi, spec)?)?;
            Ok((mo[1], mo[2]))
        })
        .collect::<Result<Vec<_>>>()?;
    let psi: Vec<f64> = vals.iter().map(|v| v.0).collect();
    let ups: Vec<f64> = vals.iter().map(|v| v.1).collect();
    let growth = |v: &[f64]| {
        let running: Vec<f64> = v
            .iter()
            .scan(0.0f64, |m, &x| {
                *m = m.max(x);
                Some(*m)
            })
            .collect();
        let n = running.len();
        running[n - 1] / running[n.saturating_sub(4)] - 1.0
    };
    let g = growth(&psi).max(growth(&ups));
    Ok(VerificationReport::predicate("lemma2.5.sup", g, 0.05, g < 0.05)
        .input("p", p)
        .detail("moduli", moduli.to_vec())
        .detail("psi", psi)
        .detail("upsilon", ups))
}
