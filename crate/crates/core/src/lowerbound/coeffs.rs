use crate::error::{Error, Result};
use crate::specfun::{f21, gamma, log_gamma};
use crate::sum::CompensatedSum;
use num_complex::Complex64;

fn check_p(p: f64) -> Result<()> {
    if !(p > 4.0 / 3.0 && p < 4.0) {
        return Err(Error::domain(format!("p = {p} outside (4/3, 4)")));
    }
    Ok(())
}

fn conjugate(p: f64) -> f64 {
    p / (p - 1.0)
}

/// `Γ(2/p) Γ(2/q)`.
pub fn gamma_product(p: f64) -> Result<f64> {
    Ok(gamma(2.0 / p)? * gamma(2.0 / conjugate(p))?)
}

/// `ε_k = (2/p)_k/k! · (Γ(k+2)Γ(k+1)/(Γ(k+1+2/q)Γ(k+2/p)) − 1)`, from log-gamma.
pub fn coeff_epsilon(k: u32, p: f64) -> Result<f64> {
    check_p(p)?;
    let (a, b) = (2.0 / p, 2.0 / conjugate(p));
    let k = k as f64;
    let lead = (log_gamma(k + a)? - log_gamma(a)? - log_gamma(k + 1.0)?).exp();
    let l = log_gamma(k + 2.0)? + log_gamma(k + 1.0)? - log_gamma(k + 1.0 + b)? - log_gamma(k + a)?;
    Ok(lead * l.exp_m1())
}

/// `a_k = F(2/p−1, k+1; k+2; s) − Γ(2/q)Γ(k+2)/Γ(k+1+2/q)`, `s = |ξ|²`.
pub fn coeff_a(k: u32, s: f64, p: f64) -> Result<f64> {
    check_p(p)?;
    if !(0.0..1.0).contains(&s) {
        return Err(Error::domain(format!("|xi|^2 = {s} outside [0, 1)")));
    }
    let b = 2.0 / conjugate(p);
    let k = k as f64;
    let sub = (log_gamma(b)? + log_gamma(k + 2.0)? - log_gamma(k + 1.0 + b)?).exp();
    Ok(f21(2.0 / p - 1.0, k + 1.0, k + 2.0, s)? - sub)
}

/// Which coefficient family a sequence holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffKind {
    Epsilon,
    A,
}

/// `ε_k` or `a_k(ξ)` for `k = 0..len`, built by recurrences.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequence {
    pub kind: CoeffKind,
    pub p: f64,
    /// `|ξ|²` for `a_k`; zero for `ε_k`.
    pub s: f64,
    pub values: Vec<f64>,
}

impl CoefficientSequence {
    pub fn epsilon(p: f64, len: usize) -> Result<Self> {
        check_p(p)?;
        Ok(Self {
            kind: CoeffKind::Epsilon,
            p,
            s: 0.0,
            values: epsilon_sequence(p, len)?,
        })
    }

    pub fn a(p: f64, s: f64, len: usize) -> Result<Self> {
        check_p(p)?;
        if !(0.0..1.0).contains(&s) {
            return Err(Error::domain(format!("|xi|^2 = {s} outside [0, 1)")));
        }
        let g = proj_coefficients(p, s, len)?;
        let sub = subtraction_sequence(p, len);
        Ok(Self {
            kind: CoeffKind::A,
            p,
            s,
            values: g.iter().zip(&sub).map(|(g, c)| g - c).collect(),
        })
    }

    /// Largest relative discrepancy against the defining formulas over
    /// the first `n` entries.
    pub fn max_discrepancy(&self, n: usize) -> Result<f64> {
        let mut worst = 0.0f64;
        for (k, &v) in self.values.iter().enumerate().take(n) {
            let direct = match self.kind {
                CoeffKind::Epsilon => coeff_epsilon(k as u32, self.p)?,
                CoeffKind::A => coeff_a(k as u32, self.s, self.p)?,
            };
            worst = worst.max((v - direct).abs() / direct.abs().max(1e-300).max(v.abs()).max(1e-12));
        }
        Ok(worst)
    }
}

/// `(2/p)_k / k!`.
fn rising_sequence(p: f64, len: usize) -> Vec<f64> {
    let a = 2.0 / p;
    let mut out = Vec::with_capacity(len);
    let mut v = 1.0;
    for k in 0..len {
        out.push(v);
        v *= (k as f64 + a) / (k as f64 + 1.0);
    }
    out
}

/// `ε_k` with `L_k = ln(Γ(k+2)Γ(k+1)/(Γ(k+1+2/q)Γ(k+2/p)))` accumulated
/// from `L_0` by the exact increments
/// `ln(1 + d/((k+1+2/q)(k+2/p)))`, `d = 2 − (1+2/q)(2/p)`; unlike a
/// difference of large log-gammas this keeps `L_k → 0` accurate.
fn epsilon_sequence(p: f64, len: usize) -> Result<Vec<f64>> {
    let (a, b) = (2.0 / p, 2.0 / conjugate(p));
    let d = 2.0 - (1.0 + b) * a;
    let rising = rising_sequence(p, len);
    let mut l = CompensatedSum::new();
    l.add(-log_gamma(1.0 + b)? - log_gamma(a)?);
    let mut out = Vec::with_capacity(len);
    for (k, r) in rising.into_iter().enumerate() {
        out.push(r * l.value().exp_m1());
        let kf = k as f64;
        l.add((d / ((kf + 1.0 + b) * (kf + a))).ln_1p());
    }
    Ok(out)
}

/// `Γ(2/q)Γ(k+2)/Γ(k+1+2/q)`.
fn subtraction_sequence(p: f64, len: usize) -> Vec<f64> {
    let b = 2.0 / conjugate(p);
    let mut out = Vec::with_capacity(len);
    let mut v = 1.0 / b;
    for k in 0..len {
        out.push(v);
        v *= (k as f64 + 2.0) / (k as f64 + 1.0 + b);
    }
    out
}

/// `G_k = F(2/p−1, k+1; k+2; y) = (k+1) J_k` with
/// `J_k = ∫₀¹ t^k (1−yt)^{1−2/p} dt`, by the backward recurrence
/// `J_k = (y(k+2−α)J_{k+1} + (1−y)^{1−α})/(k+1)`, `α = 2/p − 1`, which
/// damps errors by `y` per step.
pub fn proj_coefficients(p: f64, y: f64, len: usize) -> Result<Vec<f64>> {
    let alpha = 2.0 / p - 1.0;
    if len == 0 {
        return Ok(Vec::new());
    }
    let top = len - 1;
    let kt = top as f64;
    let mut j = f21(alpha, kt + 1.0, kt + 2.0, y)? / (kt + 1.0);
    let edge = (1.0 - y).powf(1.0 - alpha);
    let mut out = vec![0.0; len];
    out[top] = (kt + 1.0) * j;
    for k in (0..top).rev() {
        let kf = k as f64;
        j = (y * (kf + 2.0 - alpha) * j + edge) / (kf + 1.0);
        out[k] = (kf + 1.0) * j;
    }
    Ok(out)
}

const TAIL_TOL: f64 = 1e-10;

/// Number of terms needed so that `cmax |x|^K / (1 − |x|) ≤ TAIL_TOL`.
fn terms_needed(cmax: f64, x: f64) -> f64 {
    if x == 0.0 || cmax == 0.0 {
        return 1.0;
    }
    let target = TAIL_TOL * (1.0 - x) / cmax;
    if target >= 1.0 {
        return 1.0;
    }
    (target.ln() / x.ln()).ceil() + 1.0
}

/// Coefficient tables of the one-disk factors for a fixed `ξ` and `p`:
///
/// * `Φ_ξ(ζ) = Γ(2/p)Γ(2/q) (1 − ζξ̄)^{−2/p}` (closed form),
/// * `Ψ_ξ(ζ) = Γ(2/p)Γ(2/q) Σ ε_k (ζξ̄)^k`,
/// * `Υ_ξ(ζ) = Σ a_k(ξ) (ζξ̄)^k`,
/// * `Σ G_k (ζξ̄)^k = Φ_ξ + Ψ_ξ + Υ_ξ`, the factor of the projected
///   test function.
///
/// The table length is chosen so that every `|ζ| < 1` is summed to a tail
/// below 1e−10; each evaluation uses only as many terms as its own
/// `|ζξ̄|` requires.
#[derive(Debug, Clone)]
pub struct FactorTable {
    pub p: f64,
    pub xi: Complex64,
    pub gg: f64,
    pub psi: Vec<f64>,
    pub ups: Vec<f64>,
    pub proj: Vec<f64>,
    cmax: f64,
}

/// Values of the three factors at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorValues {
    pub phi: Complex64,
    pub psi: Complex64,
    pub ups: Complex64,
}

impl FactorValues {
    pub fn sum(&self) -> Complex64 {
        self.phi + self.psi + self.ups
    }
}

impl FactorTable {
    /// Table of the length needed at `|ξ|`, capped at `cap` terms; a cap
    /// that is too short yields a truncation error on evaluation near
    /// the circle.
    pub fn new(p: f64, xi: Complex64, cap: usize) -> Result<Self> {
        check_p(p)?;
        let y = xi.norm_sqr();
        if !(y < 1.0) {
            return Err(Error::domain(format!("|xi| = {} is not below 1", xi.norm())));
        }
        // all coefficients stay below max(2, (1 − y)^{1 − 2/p}) in size
        let cmax = 2.0f64.max((1.0 - y).powf(1.0 - 2.0 / p)) * 4.0;
        let needed = terms_needed(cmax, xi.norm()) as usize + 1;
        let len = needed.clamp(64, cap.max(1));
        let gg = gamma_product(p)?;
        let proj = proj_coefficients(p, y, len)?;
        let eps = epsilon_sequence(p, len)?;
        let sub = subtraction_sequence(p, len);
        Ok(Self {
            p,
            xi,
            gg,
            psi: eps.iter().map(|e| gg * e).collect(),
            ups: proj.iter().zip(&sub).map(|(g, c)| g - c).collect(),
            proj,
            cmax,
        })
    }

    pub fn len(&self) -> usize {
        self.proj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.proj.is_empty()
    }

    fn terms_for(&self, x: Complex64) -> Result<usize> {
        let need = terms_needed(self.cmax, x.norm());
        if need > self.len() as f64 {
            let n = self.len();
            let tail = self.cmax * x.norm().powi(n as i32) / (1.0 - x.norm());
            return Err(Error::Truncation { terms: n, tail });
        }
        Ok((need as usize).max(1))
    }

    fn horner(c: &[f64], x: Complex64) -> Complex64 {
        c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &ck| acc * x + ck)
    }

    pub fn phi(&self, zeta: Complex64) -> Complex64 {
        let base = Complex64::new(1.0, 0.0) - zeta * self.xi.conj();
        self.gg * base.powf(-2.0 / self.p)
    }

    pub fn psi(&self, zeta: Complex64) -> Result<Complex64> {
        let x = zeta * self.xi.conj();
        Ok(Self::horner(&self.psi[..self.terms_for(x)?], x))
    }

    pub fn upsilon(&self, zeta: Complex64) -> Result<Complex64> {
        let x = zeta * self.xi.conj();
        Ok(Self::horner(&self.ups[..self.terms_for(x)?], x))
    }

    pub fn proj(&self, zeta: Complex64) -> Result<Complex64> {
        let x = zeta * self.xi.conj();
        Ok(Self::horner(&self.proj[..self.terms_for(x)?], x))
    }

    /// `Φ`, `Ψ` and `Υ` together, sharing one truncation.
    pub fn all(&self, zeta: Complex64) -> Result<FactorValues> {
        let x = zeta * self.xi.conj();
        let n = self.terms_for(x)?;
        let zero = Complex64::new(0.0, 0.0);
        let (mut psi, mut ups) = (zero, zero);
        for k in (0..n).rev() {
            psi = psi * x + self.psi[k];
            ups = ups * x + self.ups[k];
        }
        Ok(FactorValues { phi: self.phi(zeta), psi, ups })
    }
}

/// Default cap on factor-series length.
pub const DEFAULT_CAP: usize = 1 << 17;

pub fn phi(zeta: Complex64, xi: Complex64, p: f64) -> Result<Complex64> {
    check_p(p)?;
    let base = Complex64::new(1.0, 0.0) - zeta * xi.conj();
    Ok(gamma_product(p)? * base.powf(-2.0 / p))
}

pub fn psi(zeta: Complex64, xi: Complex64, p: f64, cap: usize) -> Result<Complex64> {
    FactorTable::new(p, xi, cap)?.psi(zeta)
}

pub fn upsilon(zeta: Complex64, xi: Complex64, p: f64, cap: usize) -> Result<Complex64> {
    FactorTable::new(p, xi, cap)?.upsilon(zeta)
}

/// `Σ_k F(2/p−1, 1+k; 2+k; |ξ|²) (ζξ̄)^k`.
pub fn proj_factor(zeta: Complex64, xi: Complex64, p: f64, cap: usize) -> Result<Complex64> {
    FactorTable::new(p, xi, cap)?.proj(zeta)
}
