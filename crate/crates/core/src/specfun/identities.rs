use super::gamma::{gamma, sin_pi};
use super::hyp::{hyp2f1, hyp2f1_at_one, hyp2f1_euler, hyp2f1_series, HypParams, SeriesControl};
use crate::error::{Error, Result};
use crate::quadrature::{IntervalRule, QuadratureSpec};
use crate::report::VerificationReport;
use std::f64::consts::PI;
use std::str::FromStr;

/// A classical gamma or hypergeometric identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `x Γ(x) = Γ(x + 1)`
    Recurrence,
    /// `Γ(x) Γ(1 - x) = π / sin(π x)`
    Reflection,
    /// `Γ(x) Γ(x + 1/2) = 2^{1-2x} √π Γ(2x)`
    Duplication,
    /// `F(a, b; c; x) = (1 - x)^{c-a-b} F(c-a, c-b; c; x)`
    EulerTransform,
    /// `F(a, b; c; x) = Γ(c)/(Γ(b)Γ(c-b)) ∫ t^{b-1}(1-t)^{c-b-1}(1-xt)^{-a} dt`
    IntegralRep,
    /// `d^k/dx^k F(a, b; c; x) = (a)_k (b)_k / (c)_k F(a+k, b+k; c+k; x)`
    Derivative(u32),
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Recurrence,
        Identity::Reflection,
        Identity::Duplication,
        Identity::EulerTransform,
        Identity::IntegralRep,
        Identity::Derivative(1),
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Identity::Recurrence => "recurrence",
            Identity::Reflection => "reflection",
            Identity::Duplication => "duplication",
            Identity::EulerTransform => "euler_transform",
            Identity::IntegralRep => "integral_rep",
            Identity::Derivative(_) => "derivative",
        }
    }

    /// Tolerance matched to how each side is computed: closed forms and
    /// series to near machine precision, quadrature to 1e-8, finite
    /// differences to 1e-6.
    pub fn default_tolerance(&self) -> f64 {
        match self {
            Identity::Recurrence | Identity::Reflection => 1e-12,
            Identity::Duplication => 1e-11,
            Identity::EulerTransform => 1e-12,
            Identity::IntegralRep => 1e-8,
            Identity::Derivative(_) => 1e-6,
        }
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "recurrence" => Identity::Recurrence,
            "reflection" => Identity::Reflection,
            "duplication" => Identity::Duplication,
            "euler_transform" => Identity::EulerTransform,
            "integral_rep" => Identity::IntegralRep,
            "derivative" => Identity::Derivative(1),
            other => return Err(Error::Usage(format!("unknown identity {other:?}"))),
        })
    }
}

fn finite_difference(f: impl Fn(f64) -> Result<f64>, x: f64, k: u32) -> Result<f64> {
    let h = if k == 1 {
        1e-5
    } else {
        f64::EPSILON.powf(1.0 / (k as f64 + 2.0))
    };
    let half = k as f64 / 2.0;
    if x - half * h < 0.0 || x + half * h >= 1.0 {
        return Err(Error::domain(format!(
            "finite-difference stencil around x = {x} leaves [0, 1)"
        )));
    }
    let mut acc = 0.0;
    let mut binom = 1.0;
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom * f(x + (half - i as f64) * h)?;
        binom *= (k - i) as f64 / (i + 1) as f64;
    }
    Ok(acc / h.powi(k as i32))
}

/// Evaluates both sides of `id`. Gamma identities read their argument from
/// `x` and ignore `params`.
pub fn identity_check(
    id: Identity,
    params: HypParams,
    x: f64,
    tolerance: Option<f64>,
) -> Result<VerificationReport> {
    let tol = tolerance.unwrap_or_else(|| id.default_tolerance());
    let ctl = SeriesControl::default();
    let (lhs, rhs) = match id {
        Identity::Recurrence => (x * gamma(x)?, gamma(x + 1.0)?),
        Identity::Reflection => {
            let s = sin_pi(x);
            if s == 0.0 {
                return Err(Error::Pole(x));
            }
            (gamma(x)? * gamma(1.0 - x)?, PI / s)
        }
        Identity::Duplication => (
            gamma(x)? * gamma(x + 0.5)?,
            2f64.powf(1.0 - 2.0 * x) * PI.sqrt() * gamma(2.0 * x)?,
        ),
        Identity::EulerTransform => (hyp2f1_series(params, x, ctl)?, hyp2f1_euler(params, x, ctl)?),
        Identity::IntegralRep => {
            let HypParams { a, b, c } = params;
            if !(c > b && b > 0.0) {
                return Err(Error::domain(format!(
                    "integral representation needs c > b > 0, got b = {b}, c = {c}"
                )));
            }
            let rule = IntervalRule::new(b - 1.0, c - b - 1.0, &QuadratureSpec::default(), 1.0, 1.0)?;
            let integral = rule.integrate(|n| (1.0 - x * n.x).powf(-a))?;
            let scale = gamma(c)? / (gamma(b)? * gamma(c - b)?);
            (hyp2f1(params, x, ctl)?, scale * integral)
        }
        Identity::Derivative(k) => {
            let fd = finite_difference(|y| hyp2f1(params, y, ctl), x, k)?;
            let kf = k as f64;
            let shifted = HypParams::new(params.a + kf, params.b + kf, params.c + kf)?;
            let poch = super::pochhammer(params.a, k) * super::pochhammer(params.b, k)
                / super::pochhammer(params.c, k);
            (fd, poch * hyp2f1(shifted, x, ctl)?)
        }
    };
    let mut report = VerificationReport::compare(format!("identity.{}", id.name()), lhs, rhs, tol);
    report = match id {
        Identity::Recurrence | Identity::Reflection | Identity::Duplication => report.input("x", x),
        _ => report
            .input("a", params.a)
            .input("b", params.b)
            .input("c", params.c)
            .input("x", x),
    };
    if let Identity::Derivative(k) = id {
        report = report.input("k", k as f64);
    }
    Ok(report)
}

/// Low-discrepancy points of `(lo, hi)`: the additive golden-ratio sequence.
pub(crate) fn golden_points(n: usize, lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    const PHI_FRAC: f64 = 0.618_033_988_749_894_8;
    (1..=n).map(move |i| lo + (hi - lo) * (i as f64 * PHI_FRAC).fract())
}

/// Deterministic battery over the whole identity corpus: 200 points for
/// each gamma identity and a fixed parameter table for the hypergeometric
/// ones.
/// Gauss summation: `F(a, b; c; x)` at `x = 1 − 2^{−k}`, `k = 10, 11, 12`,
/// extrapolated to `x = 1` by eliminating the `h^{c−a−b}` and `h` terms
/// (`h = 1 − x`; `h` and `h ln h` when `c − a − b = 1`), against
/// `Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b))`.
pub fn gauss_sum_check(p: HypParams, tolerance: Option<f64>) -> Result<VerificationReport> {
    let s = p.excess();
    if !(s > 0.2) {
        return Err(Error::domain(format!("c - a - b = {s} must exceed 0.2")));
    }
    let exact = hyp2f1_at_one(p)?;
    let ctl = SeriesControl::default();
    let basis = |h: f64| -> [f64; 3] {
        if (s - 1.0).abs() < 1e-3 {
            [1.0, h, h * h.ln()]
        } else {
            [1.0, h.powf(s), h]
        }
    };
    let mut rows = [[0.0; 3]; 3];
    let mut rhs = [0.0; 3];
    let mut path = Vec::new();
    for (i, k) in (10..=12).enumerate() {
        let h = 0.5f64.powi(k);
        rows[i] = basis(h);
        rhs[i] = hyp2f1(p, 1.0 - h, ctl)?;
        path.push(rhs[i]);
    }
    let m = nalgebra::Matrix3::from_fn(|i, j| rows[i][j]);
    let sol = m
        .lu()
        .solve(&nalgebra::Vector3::from(rhs))
        .ok_or_else(|| Error::NonFinite("singular extrapolation system".into()))?;
    Ok(
        VerificationReport::compare("identity.gauss_sum", sol[0], exact, tolerance.unwrap_or(1e-4))
            .input("a", p.a)
            .input("b", p.b)
            .input("c", p.c)
            .detail("path", path),
    )
}

pub fn identity_suite() -> Result<Vec<VerificationReport>> {
    let dummy = HypParams::new(1.0, 1.0, 2.0)?;
    let mut out = Vec::new();
    for x in golden_points(200, 0.1, 50.0) {
        out.push(identity_check(Identity::Recurrence, dummy, x, None)?);
    }
    for x in golden_points(200, 0.0, 1.0) {
        out.push(identity_check(Identity::Reflection, dummy, x, None)?);
    }
    for x in golden_points(200, 0.1, 20.0) {
        out.push(identity_check(Identity::Duplication, dummy, x, None)?);
    }
    let table = [
        (0.4, 0.6, 1.5, 0.3),
        (0.5, 0.5, 1.0, 0.25),
        (1.0, 1.0, 2.0, 0.5),
        (0.3, 1.2, 2.7, 0.8),
        (-0.25, 0.75, 1.75, 0.6),
        (0.5, 1.0, 2.5, 0.4),
    ];
    for &(a, b, c, x) in &table {
        let p = HypParams::new(a, b, c)?;
        out.push(identity_check(Identity::EulerTransform, p, x, None)?);
        out.push(identity_check(Identity::IntegralRep, p, x, None)?);
        out.push(identity_check(Identity::Derivative(1), p, x, None)?);
    }
    for &(a, b, c) in &[(0.5, 0.5, 2.0), (0.3, 0.4, 1.2), (0.25, 0.5, 1.0), (-0.5, 1.5, 1.75)] {
        out.push(gauss_sum_check(HypParams::new(a, b, c)?, None)?);
    }
    Ok(out)
}
