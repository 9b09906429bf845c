//! Upper-bound machinery: the Schur weight `h`, the weighted kernel
//! integral `T_t`, its radial closed form `I`, the disk estimates it rests
//! on, and the two-sided bound formulas.
//!
//! For `z = (z1, z2)` and `λ = z1/z2` the substitution `w1 = u·w2` splits
//! `T_t(z)` into a product of disk integrals:
//!
//! ```text
//! T_t(z) = h(z)^t |z2|⁻¹ · ∫ |w|^{1−2t} (1−|w|²)^{−t} |1 − z2 w̄|⁻² dν(w)
//!                        · ∫ (1−|u|²)^{−t} |1 − λ ū|⁻² dν(u)
//!        = I(|z2|) · F(1−t, 1−t; 2−t; |λ|²) / (1−t).
//! ```

use crate::error::{Error, Result};
use crate::lowerbound::BoundaryPath;
use crate::quadrature::{
    integrate_torus, DiskRule, Focus, HartogsPoint, IntervalRule, QuadratureSpec, RadialWeight,
};
use crate::report::VerificationReport;
use crate::specfun::{f21, gamma, hyp2f1_coefficients, sin_pi, HypParams};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Exponent `t` of the Schur weight and the `(c, t)` pair of the disk
/// estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchurParams {
    pub t: f64,
    pub c: f64,
    pub t2: f64,
}

impl SchurParams {
    /// Schur exponent, `1/2 < t < 1`.
    pub fn schur(t: f64) -> Result<Self> {
        check_schur_t(t)?;
        Ok(Self { t, c: 1.0, t2: 0.0 })
    }

    /// Disk estimate parameters, `c > 0`, `t2 > −1`.
    pub fn forelli_rudin(c: f64, t2: f64) -> Result<Self> {
        if !(c > 0.0 && t2 > -1.0) {
            return Err(Error::domain(format!("need c > 0 and t > -1, got c = {c}, t = {t2}")));
        }
        Ok(Self { t: 0.75, c, t2 })
    }
}

fn check_schur_t(t: f64) -> Result<()> {
    if !(t > 0.5 && t < 1.0) {
        return Err(Error::domain(format!("Schur exponent t = {t} outside (1/2, 1)")));
    }
    Ok(())
}

/// `p ∈ (4/3, 4)` and its conjugate `q = p/(p−1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentPair {
    pub p: f64,
    pub q: f64,
}

impl ExponentPair {
    pub fn new(p: f64) -> Result<Self> {
        if !(p > 4.0 / 3.0 && p < 4.0) {
            return Err(Error::domain(format!("p = {p} outside (4/3, 4)")));
        }
        Ok(Self { p, q: p / (p - 1.0) })
    }

    pub fn conjugate(&self) -> Self {
        Self { p: self.q, q: self.p }
    }
}

/// `h(z) = (|z2|² − |z1|²)(1 − |z2|²)`.
pub fn weight_h(z: &HartogsPoint) -> Result<f64> {
    if !z.is_inside() {
        return Err(Error::domain(format!("{z:?} is not in the Hartogs triangle")));
    }
    let s2 = z.z2.norm_sqr();
    Ok((s2 - z.z1.norm_sqr()) * (1.0 - s2))
}

/// `T_t(z)` without the range check on `t`; a non-integrable weight shows
/// up as a divergence error from the radial rule.
fn weighted_kernel_integral(z: &HartogsPoint, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    let lambda = z.ratio();
    let r2 = z.z2.norm();
    let base = DiskRule::new(spec, RadialWeight::new(0.5 - t, -t), &[Focus::toward(z.z2)])?;
    let fibre = DiskRule::new(spec, RadialWeight::new(0.0, -t), &[Focus::toward(lambda)])?;
    let z2 = z.z2;
    let w2 = base.integrate_real(|w| 1.0 / (Complex64::new(1.0, 0.0) - z2 * w.conj()).norm_sqr())?;
    let u = fibre.integrate_real(|u| 1.0 / (Complex64::new(1.0, 0.0) - lambda * u.conj()).norm_sqr())?;
    let ht = r2.powf(2.0 * t) * (1.0 - lambda.norm_sqr()).powf(t) * (1.0 - r2 * r2).powf(t);
    Ok(ht * w2 * u / r2)
}

/// `T_t(z) = h(z)^t ∫_H |z2 w̄2| h(w)^{−t} |1 − z2 w̄2|⁻² |z2 w̄2 − z1 w̄1|⁻² dμ(w)`
/// by two weighted disk quadratures.
pub fn schur_integral(z: &HartogsPoint, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_schur_t(t)?;
    if !z.is_inside() {
        return Err(Error::domain(format!("{z:?} is not in the Hartogs triangle")));
    }
    weighted_kernel_integral(z, t, spec)
}

/// `T_t(z) = I(|z2|) · F(1−t, 1−t; 2−t; |z1/z2|²)/(1−t)`.
pub fn schur_integral_semi_analytic(z: &HartogsPoint, t: f64) -> Result<f64> {
    check_schur_t(t)?;
    if !z.is_inside() {
        return Err(Error::domain(format!("{z:?} is not in the Hartogs triangle")));
    }
    let fibre = f21(1.0 - t, 1.0 - t, 2.0 - t, z.ratio().norm_sqr())? / (1.0 - t);
    Ok(i_closed(z.z2.norm(), t)? * fibre)
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::domain(format!("radius {r} outside (0, 1)")));
    }
    Ok(())
}

/// `I(r) = 2^{2t−1} √π Γ(2−2t)/Γ(5/2−2t) · r^{2t−1} F(3/2−2t, 1−t; 5/2−2t; r²)`.
pub fn i_closed(r: f64, t: f64) -> Result<f64> {
    check_schur_t(t)?;
    check_radius(r)?;
    let k = 2f64.powf(2.0 * t - 1.0) * PI.sqrt() * gamma(2.0 - 2.0 * t)? / gamma(2.5 - 2.0 * t)?;
    Ok(k * r.powf(2.0 * t - 1.0) * f21(1.5 - 2.0 * t, 1.0 - t, 2.5 - 2.0 * t, r * r)?)
}

/// `I(r) = 2(1−r²)^t r^{2t−1} ∫₀¹ s^{2−2t}(1−s²)^{−t}/(1−s²r²) ds`, computed
/// in `ρ = s²` as `(1−r²)^t r^{2t−1} ∫₀¹ ρ^{1/2−t}(1−ρ)^{−t}/(1−ρr²) dρ`.
pub fn i_numeric(r: f64, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_schur_t(t)?;
    check_radius(r)?;
    let r2 = r * r;
    let rule = IntervalRule::new(0.5 - t, -t, spec, 1.0, 0.25 * (1.0 - r2))?;
    let v = rule.integrate(|n| 1.0 / (n.one_minus_x + n.x * (1.0 - r2)))?;
    Ok((1.0 - r2).powf(t) * r.powf(2.0 * t - 1.0) * v)
}

/// `Γ²(1−t)Γ²(t) = π²/sin²(πt)`.
pub fn schur_constant(t: f64) -> Result<f64> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::domain(format!("t = {t} outside (0, 1)")));
    }
    let s = PI / sin_pi(t);
    Ok(s * s)
}

/// Points `(ρ², ρ)`, `ρ = 1 − 2^{−k}`, along which `|z2|` and `|z1/z2|`
/// approach 1 together.
pub fn schur_path(path: BoundaryPath) -> Vec<HartogsPoint> {
    path.points()
        .into_iter()
        .map(|x| HartogsPoint::new(x.xi1, x.xi2).expect("path point inside H"))
        .collect()
}

fn nondecreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] >= w[0])
}

/// Supremum estimate of `T_t` along the boundary path: the deepest value
/// compared with `Γ²(1−t)Γ²(t)` at 5%, together with the monotonicity of
/// the sequence and the bound `T_t ≤ Γ²(1−t)Γ²(t)(1 + 1e−3)`.
pub fn schur_sup_estimate(t: f64, path: BoundaryPath, spec: &QuadratureSpec) -> Result<VerificationReport> {
    check_schur_t(t)?;
    let c = schur_constant(t)?;
    let points = schur_path(path);
    let values = points
        .par_iter()
        .map(|z| schur_integral(z, t, spec))
        .collect::<Result<Vec<_>>>()?;
    let closed = points
        .iter()
        .map(|z| schur_integral_semi_analytic(z, t))
        .collect::<Result<Vec<_>>>()?;
    let last = *values.last().expect("path has at least one point");
    let monotone = nondecreasing(&values);
    let bounded = values.iter().all(|&v| v <= c * (1.0 + 1e-3));
    Ok(VerificationReport::compare("lemma2.3.sup", last, c, 0.05)
        .require(monotone && bounded)
        .input("t", t)
        .input("depth", path.depth as f64)
        .detail("radii", path.radii())
        .detail("path", values)
        .detail("semi_analytic", closed)
        .detail("monotone", vec![monotone as u8 as f64])
        .detail("bounded", vec![bounded as u8 as f64]))
}

/// `Γ(t+1)Γ(c)/Γ²((2+t+c)/2)`.
pub fn forelli_rudin_closed(c: f64, t2: f64) -> Result<f64> {
    SchurParams::forelli_rudin(c, t2)?;
    let g = gamma(0.5 * (2.0 + t2 + c))?;
    Ok(gamma(t2 + 1.0)? * gamma(c)? / (g * g))
}

/// `(1−|z|²)^c ∫ (1−|w|²)^t |1 − z w̄|^{−(2+t+c)} dν(w)` by quadrature.
pub fn forelli_rudin_integral(c: f64, t2: f64, z: Complex64, spec: &QuadratureSpec) -> Result<f64> {
    SchurParams::forelli_rudin(c, t2)?;
    if !(z.norm() < 1.0) {
        return Err(Error::domain(format!("|z| = {} is not below 1", z.norm())));
    }
    let s = 0.5 * (2.0 + t2 + c);
    let rule = DiskRule::new(spec, RadialWeight::new(0.0, t2), &[Focus::toward(z)])?;
    let v = rule.integrate_real(|w| (Complex64::new(1.0, 0.0) - z * w.conj()).norm_sqr().powf(-s))?;
    Ok((1.0 - z.norm_sqr()).powf(c) * v)
}

/// Series form of the same quantity: `F(b, b; t+2; |z|²)/(t+1)` with
/// `b = (2+t−c)/2`.
pub fn forelli_rudin_series(c: f64, t2: f64, r: f64) -> Result<f64> {
    SchurParams::forelli_rudin(c, t2)?;
    let b = 0.5 * (2.0 + t2 - c);
    Ok(f21(b, b, t2 + 2.0, r * r)? / (t2 + 1.0))
}

/// Supremum estimate of the disk estimate along `|z| = 1 − 2^{−k}` against
/// its closed form, at 1%.
pub fn forelli_rudin_sup(c: f64, t2: f64, path: BoundaryPath, spec: &QuadratureSpec) -> Result<VerificationReport> {
    let closed = forelli_rudin_closed(c, t2)?;
    let radii = path.radii();
    let values = radii
        .par_iter()
        .map(|&r| forelli_rudin_integral(c, t2, Complex64::new(r, 0.0), spec))
        .collect::<Result<Vec<_>>>()?;
    let series = radii
        .iter()
        .map(|&r| forelli_rudin_series(c, t2, r))
        .collect::<Result<Vec<_>>>()?;
    let sup = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(VerificationReport::compare("lemma2.2.sup", sup, closed, 0.01)
        .input("c", c)
        .input("t", t2)
        .input("depth", path.depth as f64)
        .detail("radii", radii)
        .detail("path", values)
        .detail("series", series))
}

/// `∫_T |1 − ⟨z, ζ⟩|^{−2a} dσ(ζ)` by the trapezoid rule against
/// `F(a, a; 1; |z|²)`, at 1e−8.
pub fn torus_identity_check(a: f64, r2: f64, angular_nodes: usize) -> Result<VerificationReport> {
    if !(0.0..1.0).contains(&r2) {
        return Err(Error::domain(format!("|z|^2 = {r2} outside [0, 1)")));
    }
    if angular_nodes == 0 {
        return Err(Error::domain("angular_nodes must be positive"));
    }
    let z = Complex64::new(r2.sqrt(), 0.0);
    let lhs = integrate_torus(
        |zeta| Complex64::new((Complex64::new(1.0, 0.0) - z * zeta.conj()).norm_sqr().powf(-a), 0.0),
        angular_nodes,
    )
    .re;
    let rhs = f21(a, a, 1.0, r2)?;
    Ok(VerificationReport::compare("lemma2.1.torus", lhs, rhs, 1e-8)
        .input("a", a)
        .input("r2", r2)
        .input("angular_nodes", angular_nodes as f64))
}

/// The auxiliary function `g(λ) = (t−1/2)F(3/2−2t, 1−t; 5/2−2t; λ) +
/// λF(5/2−2t, 2−t; 7/2−2t; λ)`.
pub fn monotone_g(t: f64, lambda: f64) -> Result<f64> {
    Ok((t - 0.5) * f21(1.5 - 2.0 * t, 1.0 - t, 2.5 - 2.0 * t, lambda)?
        + lambda * f21(2.5 - 2.0 * t, 2.0 - t, 3.5 - 2.0 * t, lambda)?)
}

/// `f(λ) = λ^{t−1/2} F(3/2−2t, 1−t; 5/2−2t; λ)`.
pub fn monotone_f(t: f64, lambda: f64) -> Result<f64> {
    Ok(lambda.powf(t - 0.5) * f21(1.5 - 2.0 * t, 1.0 - t, 2.5 - 2.0 * t, lambda)?)
}

/// The exact derivative factor `λ^{3/2−t} f'(λ)`, which carries the
/// factor `ab/c` on the second term.
pub fn monotone_g_exact(t: f64, lambda: f64) -> Result<f64> {
    let (a, b, c) = (1.5 - 2.0 * t, 1.0 - t, 2.5 - 2.0 * t);
    Ok((t - 0.5) * f21(a, b, c, lambda)? + lambda * a * b / c * f21(a + 1.0, b + 1.0, c + 1.0, lambda)?)
}

/// For `t ≥ 3/4`: `g` positive and `f` increasing on `grid`. For `t < 3/4`:
/// the first 100 Taylor coefficients of `F(3/2−2t, 1−t; 5/2−2t; ·)` positive.
pub fn monotone_g_check(t: f64, grid: &[f64]) -> Result<VerificationReport> {
    check_schur_t(t)?;
    let a = 1.5 - 2.0 * t;
    if a <= 0.0 {
        if grid.iter().any(|&l| !(l > 0.0 && l < 1.0)) {
            return Err(Error::domain("grid points must lie in (0, 1)"));
        }
        let g = grid.iter().map(|&l| monotone_g(t, l)).collect::<Result<Vec<_>>>()?;
        let f = grid.iter().map(|&l| monotone_f(t, l)).collect::<Result<Vec<_>>>()?;
        let g0 = monotone_g(t, 0.0)?;
        let min_g = g.iter().cloned().fold(g0, f64::min);
        let increasing = f.windows(2).all(|w| w[1] > w[0]);
        Ok(VerificationReport::predicate("lemma2.3.monotone", min_g, 0.0, min_g > 0.0 && increasing)
            .input("t", t)
            .input("grid_points", grid.len() as f64)
            .detail("g0", vec![g0])
            .detail("g", g)
            .detail("f", f))
    } else {
        let coeffs = hyp2f1_coefficients(HypParams::new(a, 1.0 - t, 2.5 - 2.0 * t)?, 100);
        let min_c = coeffs.iter().cloned().fold(f64::INFINITY, f64::min);
        Ok(VerificationReport::predicate("lemma2.3.monotone", min_c, 0.0, min_c > 0.0)
            .input("t", t)
            .input("coefficients", coeffs.len() as f64)
            .detail("taylor", coeffs))
    }
}

/// `Γ²(1−2/p)Γ²(2/p)`; a pole at `p = 2`.
pub fn upper_bound(e: ExponentPair) -> Result<f64> {
    let t = 2.0 / e.p;
    if t == 1.0 {
        return Err(Error::Pole(0.0));
    }
    let g = gamma(1.0 - t)? * gamma(t)?;
    Ok(g * g)
}

/// `Γ²(2/p)Γ²(2/q)`.
pub fn lower_bound(e: ExponentPair) -> Result<f64> {
    let g = gamma(2.0 / e.p)? * gamma(2.0 / e.q)?;
    Ok(g * g)
}

/// One row of the bounds table; `upper` is `None` at `p = 2`, where the
/// norm is exactly 1 and the upper formula has a pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsRow {
    pub p: f64,
    pub q: f64,
    pub lower: f64,
    pub upper: Option<f64>,
    pub exact_norm: Option<f64>,
}

impl BoundsRow {
    pub fn upper_or_inf(&self) -> f64 {
        self.upper.unwrap_or(f64::INFINITY)
    }
}

pub fn bounds_table(p_grid: &[f64]) -> Result<Vec<BoundsRow>> {
    p_grid
        .iter()
        .map(|&p| {
            let e = ExponentPair::new(p)?;
            let lower = lower_bound(e)?;
            let (upper, exact_norm) = match upper_bound(e) {
                Ok(u) => (Some(u), None),
                Err(Error::Pole(_)) => (None, Some(1.0)),
                Err(err) => return Err(err),
            };
            Ok(BoundsRow { p, q: e.q, lower, upper, exact_norm })
        })
        .collect()
}

pub const BOUNDS_CSV_HEADER: &str = "check_id,p,q,lower,upper";

/// CSV with `inf` as the upper sentinel at `p = 2`.
pub fn bounds_csv(rows: &[BoundsRow]) -> String {
    let mut s = String::from(BOUNDS_CSV_HEADER);
    s.push('\n');
    for r in rows {
        let upper = r.upper.map_or("inf".to_string(), |u| format!("{u:.7}"));
        s.push_str(&format!("bounds,{},{},{:.7},{}\n", r.p, r.q, r.lower, upper));
    }
    s
}

/// Reports for the bounds rows: the lower bound stays strictly below the
/// upper one (exact norm 1 at `p = 2`).
pub fn bounds_reports(rows: &[BoundsRow]) -> Vec<VerificationReport> {
    rows.iter()
        .map(|r| {
            let report = match r.upper {
                Some(u) => VerificationReport::predicate("bounds", r.lower, 0.0, r.lower < u),
                None => VerificationReport::compare("bounds", r.lower, 1.0, 1e-15)
                    .note("p = 2: norm is exactly 1, upper bound unbounded"),
            };
            report
                .input("p", r.p)
                .input("q", r.q)
                .detail("upper", vec![r.upper_or_inf()])
        })
        .collect()
}

/// Deterministic interior points with `|z2|` and `|z1/z2|` in
/// `[0.05, 0.95]` and spread phases (an additive recurrence on four
/// irrational rotations).
pub fn interior_sample(n: usize) -> Vec<HartogsPoint> {
    const ALPHA: [f64; 4] = [0.569_840_290_998_053_3, 0.324_717_957_244_746, 0.754_877_666_246_692_7, 0.139_680_581_996_106_8];
    (1..=n)
        .map(|i| {
            let u: Vec<f64> = ALPHA.iter().map(|a| (0.5 + a * i as f64).fract()).collect();
            let r2 = 0.05 + 0.9 * u[0];
            let l = 0.05 + 0.9 * u[1];
            let z2 = Complex64::from_polar(r2, 2.0 * PI * u[2]);
            let z1 = z2 * Complex64::from_polar(l, 2.0 * PI * u[3]);
            HartogsPoint::new(z1, z2).expect("sample inside H")
        })
        .collect()
}

/// Both weighted-kernel inequalities of the Schur test with
/// `h_pq = h^{−2/(pq)}` and constant `Γ²(1−2/p)Γ²(2/p)(1 + 2%)`:
///
/// 1. `∫ |K(z,w)| h_pq(w)^q dμ(w) ≤ C h_pq(z)^q`, i.e. `T_{2/p}(z) ≤ C`;
/// 2. `∫ |K(z,w)| h_pq(z)^p dμ(z) ≤ C h_pq(w)^p`, i.e. `T_{2/q}(w) ≤ C`.
///
/// For `p > 2` the second weight `h^{−2/q}` has exponent `2/q > 1` at the
/// boundary; its integral diverges and the report records that.
pub fn schur_premise_check(p: f64, points: &[HartogsPoint], spec: &QuadratureSpec) -> Result<Vec<VerificationReport>> {
    let e = ExponentPair::new(p)?;
    let c = upper_bound(e)?;
    let mut out = Vec::new();
    for (idx, t) in [(1, 2.0 / e.p), (2, 2.0 / e.q)] {
        let values: Vec<Result<f64>> = points.par_iter().map(|z| weighted_kernel_integral(z, t, spec)).collect();
        let id = format!("schur.premise{idx}");
        let report = match values.iter().find_map(|v| v.as_ref().err()) {
            Some(err) => VerificationReport::predicate(id, f64::INFINITY, 0.02, false).note(err.to_string()),
            None => {
                let ratios: Vec<f64> = values.into_iter().map(|v| v.unwrap() / c).collect();
                let worst = ratios.iter().cloned().fold(0.0f64, f64::max);
                VerificationReport::predicate(id, worst, 0.02, worst <= 1.02).detail("ratios", ratios)
            }
        };
        out.push(
            report
                .input("p", p)
                .input("t", t)
                .input("points", points.len() as f64)
                .input("constant", c),
        );
    }
    Ok(out)
}
