use super::coeffs::{FactorTable, FactorValues};
use super::path::XiPoint;
use crate::error::{Error, Result};
use crate::quadrature::{DiskRule, Focus, HartogsPoint, QuadratureSpec, RadialWeight};
use crate::specfun::{f21, gamma_ratio};
use crate::sum::CompensatedSum;
use num_complex::Complex64;
use rayon::prelude::*;

fn check_p(p: f64) -> Result<()> {
    if !(p > 4.0 / 3.0 && p < 4.0) {
        return Err(Error::domain(format!("p = {p} outside (4/3, 4)")));
    }
    Ok(())
}

/// An `L^p` norm together with its `p`-th power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormP {
    pub p: f64,
    pub pth_power: f64,
    pub norm: f64,
}

impl NormP {
    pub fn from_pth(p: f64, pth_power: f64) -> Self {
        Self {
            p,
            pth_power,
            norm: pth_power.powf(1.0 / p),
        }
    }
}

/// `f_ξ(z) = (1−ξ2z̄2)^{1−2/p} / (z2(1−z2ξ̄2)) · (1−μv̄)^{1−2/p} / (1−vμ̄)`,
/// `v = z1/z2`, `μ = ξ1/ξ2`, principal branches.
pub fn f_xi(z: &HartogsPoint, xi: &XiPoint, p: f64) -> Result<Complex64> {
    if !z.is_inside() {
        return Err(Error::domain(format!("z = ({}, {}) is not in the Hartogs triangle", z.z1, z.z2)));
    }
    if !(p > 1.0) {
        return Err(Error::domain(format!("p = {p} must exceed 1")));
    }
    Ok(one_disk_f(z.z2, xi.xi2, p) * one_disk_f(z.ratio(), xi.ratio(), p) / z.z2)
}

fn one_disk_f(z: Complex64, xi: Complex64, p: f64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    (one - xi * z.conj()).powf(1.0 - 2.0 / p) / (one - z * xi.conj())
}

fn foci(point: Complex64) -> Vec<Focus> {
    if point.norm() > 0.0 {
        vec![Focus::toward(point)]
    } else {
        Vec::new()
    }
}

/// Rule for `∫_𝔻 |z|^{2−p} g(z) dν`, refined toward `ξ2`.
pub fn base_rule(xi2: Complex64, p: f64, spec: &QuadratureSpec) -> Result<DiskRule> {
    DiskRule::new(spec, RadialWeight::new(1.0 - 0.5 * p, 0.0), &foci(xi2))
}

/// Rule for `∫_𝔻 g(u) dν`, refined toward `ξ1/ξ2`.
pub fn fibre_rule(mu: Complex64, spec: &QuadratureSpec) -> Result<DiskRule> {
    DiskRule::new(spec, RadialWeight::NONE, &foci(mu))
}

/// Several real integrals over one rule in a single parallel pass, summed
/// in node order.
pub fn integrate_many<const N: usize, F>(rule: &DiskRule, f: F) -> Result<[f64; N]>
where
    F: Fn(Complex64) -> Result<[f64; N]> + Sync,
{
    let pts = rule.points();
    let vals = pts
        .par_iter()
        .map(|&(z, w)| f(z).map(|v| v.map(|x| x * w)))
        .collect::<Result<Vec<_>>>()?;
    let mut acc = [CompensatedSum::new(); N];
    for v in &vals {
        for (a, x) in acc.iter_mut().zip(v) {
            if !x.is_finite() {
                return Err(Error::NonFinite("disk integrand".into()));
            }
            a.add(*x);
        }
    }
    Ok(acc.map(|a| a.value()))
}

/// `∫_𝔻 dν(u) / |1 − λ̄u|² = −ln(1 − |λ|²)/|λ|²`.
pub fn fibre_norm_exact(lambda: Complex64) -> f64 {
    let s = lambda.norm_sqr();
    if s == 0.0 {
        1.0
    } else {
        -(-s).ln_1p() / s
    }
}

/// The two one-disk factors of `‖f_ξ‖_p^p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestNorm {
    /// `∫_𝔻 |z2|^{2−p} / |1−z2ξ̄2|² dν`.
    pub base: f64,
    /// `∫_𝔻 dν / |1 − λ̄u|²`, exact.
    pub fibre: f64,
    pub norm: NormP,
}

/// `‖f_ξ‖_p`, using `|f_ξ|^p = |z2|^{−p} |1−z2ξ̄2|^{−2} |1−vμ̄|^{−2}` and the
/// substitution `z1 = v z2`.
pub fn f_xi_norm_p(xi: &XiPoint, p: f64, spec: &QuadratureSpec) -> Result<TestNorm> {
    check_p(p)?;
    let xi2 = xi.xi2;
    let base = base_rule(xi2, p, spec)?
        .integrate_real(|z| 1.0 / (Complex64::new(1.0, 0.0) - z * xi2.conj()).norm_sqr())?;
    let fibre = fibre_norm_exact(xi.ratio());
    Ok(TestNorm {
        base,
        fibre,
        norm: NormP::from_pth(p, base * fibre),
    })
}

/// A partial sum with the number of terms used and an estimate of the
/// neglected tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncated<T> {
    pub value: T,
    pub terms: usize,
    pub tail: f64,
}

/// Series form of `∫_𝔻 (1−zξ̄)^{−a} (1−wξ̄)^{−b} (1−ξw̄)^{−c} (1−|ξ|²)^t dν(ξ)`:
/// `Γ(1+t)/Γ(2+t) Σ_{j≤J} (a)_j (c)_j / ((2+t)_j j!) F(b, c+j; 2+t+j; |w|²) (zw̄)^j`.
pub fn lemma24_series(
    a: f64,
    b: f64,
    c: f64,
    t: f64,
    z: Complex64,
    w: Complex64,
    terms: usize,
) -> Result<Truncated<Complex64>> {
    if !(z.norm() < 1.0 && w.norm() < 1.0) {
        return Err(Error::domain("z and w must lie in the unit disk"));
    }
    if !(t > -1.0) {
        return Err(Error::domain(format!("t = {t} must exceed -1")));
    }
    let x = z * w.conj();
    let s = w.norm_sqr();
    let lead = gamma_ratio(1.0 + t, 2.0 + t)?;
    let mut coef = 1.0;
    let mut xj = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last = 0.0;
    for j in 0..=terms {
        let jf = j as f64;
        let term = xj * (coef * f21(b, c + jf, 2.0 + t + jf, s)?);
        sum += term;
        last = term.norm();
        coef *= (a + jf) * (c + jf) / ((2.0 + t + jf) * (jf + 1.0));
        xj *= x;
        if xj == Complex64::new(0.0, 0.0) && coef.is_finite() {
            last = 0.0;
            break;
        }
    }
    let r = x.norm();
    Ok(Truncated {
        value: sum * lead,
        terms: terms + 1,
        tail: lead * last * r / (1.0 - r),
    })
}

/// Disk-quadrature oracle for [`lemma24_series`].
pub fn lemma24_integral(
    a: f64,
    b: f64,
    c: f64,
    t: f64,
    z: Complex64,
    w: Complex64,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    let mut f = foci(z);
    f.extend(foci(w));
    let rule = DiskRule::new(spec, RadialWeight::new(0.0, t), &f)?;
    let one = Complex64::new(1.0, 0.0);
    rule.integrate(|xi| {
        (one - z * xi.conj()).powf(-a) * (one - w * xi.conj()).powf(-b) * (one - xi * w.conj()).powf(-c)
    })
}

/// Factor tables for both disks of a test function.
#[derive(Debug, Clone)]
pub struct FactorPair {
    pub xi: XiPoint,
    pub base: FactorTable,
    pub fibre: FactorTable,
}

impl FactorPair {
    pub fn new(xi: &XiPoint, p: f64, cap: usize) -> Result<Self> {
        check_p(p)?;
        Ok(Self {
            xi: *xi,
            base: FactorTable::new(p, xi.xi2, cap)?,
            fibre: FactorTable::new(p, xi.ratio(), cap)?,
        })
    }

    /// `Pf_ξ(z) = proj(z2; ξ2) proj(z1/z2; ξ1/ξ2) / z2`.
    pub fn proj_f(&self, z: &HartogsPoint) -> Result<Complex64> {
        Ok(self.base.proj(z.z2)? * self.fibre.proj(z.ratio())? / z.z2)
    }
}

pub fn proj_f_xi(z: &HartogsPoint, xi: &XiPoint, p: f64, cap: usize) -> Result<Complex64> {
    if !z.is_inside() {
        return Err(Error::domain(format!("z = ({}, {}) is not in the Hartogs triangle", z.z1, z.z2)));
    }
    FactorPair::new(xi, p, cap)?.proj_f(z)
}

/// `‖Pf_ξ‖_p^p = ∫ |z2|^{2−p} |g(z2)|^p dν · ∫ |G(u)|^p dν`.
pub fn proj_f_norm_p(xi: &XiPoint, p: f64, spec: &QuadratureSpec, cap: usize) -> Result<NormP> {
    let pair = FactorPair::new(xi, p, cap)?;
    let [nb] = integrate_many(&base_rule(xi.xi2, p, spec)?, |z| Ok([pair.base.proj(z)?.norm().powf(p)]))?;
    let [nf] = integrate_many(&fibre_rule(xi.ratio(), spec)?, |u| Ok([pair.fibre.proj(u)?.norm().powf(p)]))?;
    Ok(NormP::from_pth(p, nb * nf))
}

/// `∫ weight · |A|^p` for `A ∈ {Φ, Ψ, Υ, Φ+Ψ+Υ}` over one rule, plus
/// `∫ weight · |1 − ζξ̄|^{−2}`.
pub fn factor_moments(table: &FactorTable, rule: &DiskRule) -> Result<[f64; 5]> {
    let p = table.p;
    integrate_many(rule, |z| {
        let FactorValues { phi, psi, ups } = table.all(z)?;
        let kernel = 1.0 / (Complex64::new(1.0, 0.0) - z * table.xi.conj()).norm_sqr();
        Ok([
            phi.norm().powf(p),
            psi.norm().powf(p),
            ups.norm().powf(p),
            (phi + psi + ups).norm().powf(p),
            kernel,
        ])
    })
}
