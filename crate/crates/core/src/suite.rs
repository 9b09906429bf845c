//! Check suites shared by the command-line driver and the acceptance
//! tests. Every suite takes a [`RunConfig`] and returns reports in a fixed
//! order.

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::kernel::{interior_grid, project_separable, reproduce_check, MonomialIndex, SeparableFn};
use crate::lowerbound::{
    self, lemma24_integral, lemma24_series, BoundaryPath, FactorTable,
};
use crate::quadrature::HartogsPoint;
use crate::report::VerificationReport;
use crate::schur::{self, i_closed, i_numeric};
use crate::specfun::{gamma, identity_suite, pochhammer};
use num_complex::Complex64;
use std::time::Instant;

/// Angular nodes for torus checks.
pub const TORUS_NODES: usize = 512;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Runs `f`, stamping each report with its share of the wall-clock time
/// when timings are enabled.
pub fn timed(cfg: &RunConfig, f: impl FnOnce() -> Result<Vec<VerificationReport>>) -> Result<Vec<VerificationReport>> {
    let start = Instant::now();
    let mut reports = f()?;
    if cfg.timings && !reports.is_empty() {
        let ms = start.elapsed().as_millis() as u64 / reports.len() as u64;
        for r in &mut reports {
            r.runtime_ms = ms;
        }
    }
    Ok(cfg.apply_overrides(reports))
}

pub fn identities(cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    timed(cfg, identity_suite)
}

/// Torus identity on the `a × |z|²` grid, or at one point.
pub fn lemma21(cfg: &RunConfig, point: Option<(f64, f64)>) -> Result<Vec<VerificationReport>> {
    timed(cfg, || match point {
        Some((a, r2)) => Ok(vec![schur::torus_identity_check(a, r2, TORUS_NODES)?]),
        None => {
            let mut out = Vec::new();
            for a in [0.5, 1.0, 1.5] {
                for r2 in [0.0, 0.25, 0.5, 0.81] {
                    out.push(schur::torus_identity_check(a, r2, TORUS_NODES)?);
                }
            }
            Ok(out)
        }
    })
}

pub const LEMMA22_PARAMS: [(f64, f64); 3] = [(1.0, 0.0), (0.5, 0.5), (1.5, -0.5)];

/// Weighted-integral supremum along the path, plus closed-form spot values.
pub fn lemma22(cfg: &RunConfig, params: Option<(f64, f64)>) -> Result<Vec<VerificationReport>> {
    let path = BoundaryPath::new(cfg.depth_or(8))?;
    timed(cfg, || {
        let list = params.map_or(LEMMA22_PARAMS.to_vec(), |p| vec![p]);
        let mut out = Vec::new();
        for (cc, t) in list {
            out.push(schur::forelli_rudin_sup(cc, t, path, &cfg.spec)?);
        }
        if params.is_none() {
            let spots = [(1.0, 0.0, 4.0 / std::f64::consts::PI), (0.5, 0.5, 2.0), (1.5, -0.5, 2.0)];
            for (cc, t, v) in spots {
                out.push(
                    VerificationReport::compare("lemma2.2.closed", schur::forelli_rudin_closed(cc, t)?, v, 1e-14)
                        .input("c", cc)
                        .input("t", t),
                );
            }
        }
        Ok(out)
    })
}

pub const LEMMA23_T: [f64; 3] = [0.6, 0.75, 0.9];

/// Radial closed form against quadrature on a 5×5 grid.
pub fn lemma23_closed_forms(cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    timed(cfg, || {
        let mut out = Vec::new();
        for t in [0.55, 0.65, 0.75, 0.85, 0.95] {
            for r in [0.1, 0.3, 0.5, 0.7, 0.9] {
                out.push(
                    VerificationReport::compare("lemma2.3.closed", i_numeric(r, t, &cfg.spec)?, i_closed(r, t)?, 1e-7)
                        .input("t", t)
                        .input("r", r),
                );
            }
        }
        Ok(out)
    })
}

pub fn lemma23_sup(cfg: &RunConfig, ts: &[f64]) -> Result<Vec<VerificationReport>> {
    let path = BoundaryPath::new(cfg.depth_or(8))?;
    timed(cfg, || ts.iter().map(|&t| schur::schur_sup_estimate(t, path, &cfg.spec)).collect())
}

pub fn lemma23_monotone(cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    let grid: Vec<f64> = (1..100).map(|i| i as f64 / 100.0).collect();
    timed(cfg, || [0.6, 0.8].iter().map(|&t| schur::monotone_g_check(t, &grid)).collect())
}

/// With `t` given, only the supremum estimate at `t`.
pub fn lemma23(cfg: &RunConfig, t: Option<f64>) -> Result<Vec<VerificationReport>> {
    match t {
        Some(t) => lemma23_sup(cfg, &[t]),
        None => {
            let mut out = lemma23_closed_forms(cfg)?;
            out.extend(lemma23_sup(cfg, &LEMMA23_T)?);
            out.extend(lemma23_monotone(cfg)?);
            Ok(out)
        }
    }
}

/// `(a, b, c, t, z, w)`; the second set is the `p = 3` pattern and the last
/// the `p = 3/2` one.
pub fn lemma24_params() -> [(f64, f64, f64, f64, Complex64, Complex64); 5] {
    [
        (2.0, 0.5, 1.0, 0.0, c(0.3, 0.0), c(0.4, 0.0)),
        (2.0, -1.0 / 3.0, 1.0, 0.0, c(0.5, 0.0), c(0.6, 0.0)),
        (2.0, -0.2, 1.0, 0.5, c(0.4, 0.2), c(0.5, -0.3)),
        (1.5, 0.5, 1.5, -0.5, c(0.0, -0.3), c(0.6, 0.0)),
        (2.0, 1.0 / 3.0, 1.0, 0.0, c(0.7, 0.0), c(0.0, 0.7)),
    ]
}

/// Series with its length doubled until the tail estimate drops below
/// `rel_tol` relative.
pub fn lemma24_series_adaptive(
    cfg: &RunConfig,
    (a, b, cc, t, z, w): (f64, f64, f64, f64, Complex64, Complex64),
) -> Result<lowerbound::Truncated<Complex64>> {
    let mut terms = 16;
    loop {
        let s = lemma24_series(a, b, cc, t, z, w, terms)?;
        if s.tail <= cfg.rel_tol * s.value.norm().max(1e-300) {
            return Ok(s);
        }
        if terms >= cfg.cap {
            return Err(Error::Truncation { terms: s.terms, tail: s.tail });
        }
        terms *= 2;
    }
}

pub fn lemma24(cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    timed(cfg, || {
        lemma24_params()
            .into_iter()
            .map(|set| {
                let (a, b, cc, t, z, w) = set;
                let s = lemma24_series_adaptive(cfg, set)?;
                let q = lemma24_integral(a, b, cc, t, z, w, &cfg.spec)?;
                // relative: scale the tolerance by |reference| below one too
                let tol = 1e-7 * q.norm().min(1.0);
                Ok(VerificationReport::compare("lemma2.4.series", s.value, q, tol)
                    .input("a", a)
                    .input("b", b)
                    .input("c", cc)
                    .input("t", t)
                    .input("z_re", z.re)
                    .input("z_im", z.im)
                    .input("w_re", w.re)
                    .input("w_im", w.im)
                    .input("terms", s.terms as f64))
            })
            .collect()
    })
}

/// `Γ(2/p)Γ(2/q)((2/p)_k/k! + ε_k) + a_k = F(2/p−1, k+1; k+2; |ξ|²)` for
/// `k ≤ 50`: the worst absolute discrepancy for each `p`.
pub fn decomposition(cfg: &RunConfig, ps: &[f64]) -> Result<Vec<VerificationReport>> {
    timed(cfg, || {
        ps.iter()
            .map(|&p| {
                let mut worst = 0.0f64;
                let moduli = [0.0, 0.5, 0.9, 0.99];
                for &m in &moduli {
                    let table = FactorTable::new(p, c(m, 0.0), cfg.cap)?;
                    for k in 0..=50usize {
                        let rising = pochhammer(2.0 / p, k as u32) / gamma(k as f64 + 1.0)?;
                        let lhs = table.gg * rising + table.psi[k] + table.ups[k];
                        let rhs = crate::specfun::f21(2.0 / p - 1.0, k as f64 + 1.0, k as f64 + 2.0, m * m)?;
                        worst = worst.max((lhs - rhs).abs() / rhs.abs().max(1.0));
                    }
                }
                Ok(VerificationReport::predicate("lemma2.5.decomposition", worst, 1e-12, worst < 1e-12)
                    .input("p", p)
                    .input("kmax", 50.0)
                    .detail("moduli", moduli.to_vec()))
            })
            .collect()
    })
}

pub const LEMMA25_MODULI: [f64; 5] = [0.0, 0.5, 0.9, 0.99, 0.999];

pub fn lemma25(cfg: &RunConfig, p: Option<f64>) -> Result<Vec<VerificationReport>> {
    let ps = p.map_or(vec![2.5, 3.0], |p| vec![p]);
    let mut out = decomposition(cfg, &ps)?;
    out.extend(timed(cfg, || {
        ps.iter()
            .map(|&p| lowerbound::lemma25_sup_check(p, &LEMMA25_MODULI, &cfg.spec, cfg.cap))
            .collect()
    })?);
    Ok(out)
}

pub fn bounds(cfg: &RunConfig, grid: &[f64]) -> Result<Vec<VerificationReport>> {
    timed(cfg, || Ok(schur::bounds_reports(&schur::bounds_table(grid)?)))
}

/// `pmin, pmin + h, …, pmax` with `steps` intervals.
pub fn p_grid(pmin: f64, pmax: f64, steps: usize) -> Result<Vec<f64>> {
    if steps == 0 || !(pmin <= pmax) {
        return Err(Error::Usage("need pmin <= pmax and steps >= 1".into()));
    }
    Ok((0..=steps).map(|i| pmin + (pmax - pmin) * i as f64 / steps as f64).collect())
}

pub fn lower_estimate(cfg: &RunConfig, p: f64) -> Result<Vec<VerificationReport>> {
    let path = BoundaryPath::new(cfg.depth_or(6))?;
    timed(cfg, || Ok(vec![lowerbound::ratio_path(p, path, &cfg.spec, cfg.cap)?]))
}

/// Remainder terms from depth 4 (or the shallowest level) to `depth`.
pub fn remainder(cfg: &RunConfig, p: f64) -> Result<Vec<VerificationReport>> {
    let to = cfg.depth_or(7);
    let from = 4.min(to - 1).max(2);
    if to <= from {
        return Err(Error::Usage(format!("depth {to} leaves no trend to follow")));
    }
    timed(cfg, || lowerbound::remainder_trend(p, from, to, &cfg.spec, cfg.cap))
}

pub const REPRODUCE_MONOMIALS: [(u32, i32); 4] = [(0, 0), (0, -1), (1, -1), (2, 1)];

/// Reproducing property for monomials, and annihilation of `w̄1`.
pub fn project(cfg: &RunConfig, monomial: Option<(u32, i32)>) -> Result<Vec<VerificationReport>> {
    timed(cfg, || {
        let grid = interior_grid();
        let list = monomial.map_or(REPRODUCE_MONOMIALS.to_vec(), |m| vec![m]);
        let mut out = Vec::new();
        for (j, k) in list {
            out.push(reproduce_check(MonomialIndex::new(j, k)?, &grid, &cfg.spec, 1e-6)?);
        }
        if monomial.is_none() {
            out.push(annihilation_check(&grid, cfg)?);
        }
        Ok(out)
    })
}

/// `P(w̄1) = 0`: `w̄1 = w̄2 · ū` is orthogonal to every holomorphic function.
pub fn annihilation_check(grid: &[HartogsPoint], cfg: &RunConfig) -> Result<VerificationReport> {
    let f = SeparableFn::new(|w2: Complex64| w2.conj(), |u: Complex64| u.conj());
    let values = grid
        .iter()
        .map(|z| Ok(project_separable(&f, z, &cfg.spec)?.norm()))
        .collect::<Result<Vec<f64>>>()?;
    let worst = values.iter().cloned().fold(0.0f64, f64::max);
    Ok(VerificationReport::predicate("kernel.annihilate", worst, 1e-6, worst < 1e-6)
        .input("grid_points", grid.len() as f64)
        .detail("values", values))
}

pub const PREMISE_POINTS: usize = 20;

pub fn premises(cfg: &RunConfig, ps: &[f64]) -> Result<Vec<VerificationReport>> {
    let points = schur::interior_sample(PREMISE_POINTS);
    timed(cfg, || {
        let mut out = Vec::new();
        for &p in ps {
            out.extend(schur::schur_premise_check(p, &points, &cfg.spec)?);
        }
        Ok(out)
    })
}

/// Every suite with its default arguments, ordered by check id.
pub fn all(cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    let mut out = identities(cfg)?;
    out.extend(lemma21(cfg, None)?);
    out.extend(lemma22(cfg, None)?);
    out.extend(lemma23(cfg, None)?);
    out.extend(lemma24(cfg)?);
    out.extend(lemma25(cfg, None)?);
    out.extend(project(cfg, None)?);
    out.extend(bounds(cfg, &p_grid(1.4, 3.9, 25)?)?);
    out.extend(lower_estimate(cfg, 2.0)?);
    out.extend(lower_estimate(cfg, 3.0)?);
    out.extend(remainder(cfg, 3.0)?);
    out.extend(premises(cfg, &[2.5, 3.0])?);
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(out)
}
