//! Gauss hypergeometric function `F(a, b; c; x)` for real parameters and
//! `x` in `[0, 1)`.

use super::gamma::{gamma, recip_gamma};
use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

/// Parameters `(a, b; c)` of `F(a, b; c; x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::domain("hypergeometric parameters must be finite"));
        }
        if nonpositive_integer(c) {
            return Err(Error::domain(format!("c = {c} is a nonpositive integer")));
        }
        Ok(Self { a, b, c })
    }

    /// Parameters of the Euler-transformed function `F(c-a, c-b; c; x)`.
    pub fn euler(&self) -> Self {
        Self {
            a: self.c - self.a,
            b: self.c - self.b,
            c: self.c,
        }
    }

    /// `c - a - b`, the exponent that governs behaviour at `x = 1`.
    pub fn excess(&self) -> f64 {
        self.c - self.a - self.b
    }

    fn terminating_degree(&self) -> Option<u64> {
        [self.a, self.b]
            .into_iter()
            .filter(|&v| nonpositive_integer(v))
            .map(|v| (-v) as u64)
            .min()
    }
}

/// Truncation policy for infinite series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-14,
            max_terms: 1_000_000,
        }
    }
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0) || max_terms == 0 {
            return Err(Error::domain("series control needs rel_tol > 0 and max_terms >= 1"));
        }
        Ok(Self { rel_tol, max_terms })
    }
}

fn nonpositive_integer(v: f64) -> bool {
    v <= 0.0 && v == v.floor()
}

fn check_argument(x: f64) -> Result<()> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::domain(format!("hypergeometric argument {x} outside [0, 1)")));
    }
    Ok(())
}

/// Direct power series, no transformation.
///
/// Terminates when three consecutive terms each have a geometric tail bound
/// below `rel_tol * |partial sum|`.
pub fn hyp2f1_series(p: HypParams, x: f64, ctl: SeriesControl) -> Result<f64> {
    check_argument(x)?;
    if x == 0.0 {
        return Ok(1.0);
    }
    let HypParams { a, b, c } = p;
    if let Some(deg) = p.terminating_degree() {
        let mut acc = CompensatedSum::new();
        let mut term = 1.0;
        acc.add(term);
        for n in 0..deg {
            let n = n as f64;
            term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
            acc.add(term);
        }
        return Ok(acc.value());
    }

    let mut acc = CompensatedSum::new();
    let mut term = 1.0;
    acc.add(term);
    let mut quiet = 0;
    for n in 0..ctl.max_terms {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        acc.add(term);
        let next = ((a + nf + 1.0) * (b + nf + 1.0) / ((c + nf + 1.0) * (nf + 2.0)) * x).abs();
        let rate = next.max(x);
        let tail = if rate < 1.0 {
            term.abs() * rate / (1.0 - rate)
        } else {
            f64::INFINITY
        };
        let sum = acc.value().abs();
        if tail <= ctl.rel_tol * sum && term.abs() <= ctl.rel_tol * sum {
            quiet += 1;
            if quiet >= 3 {
                return Ok(acc.value());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NoConvergence {
        terms: ctl.max_terms,
    })
}

/// `F(a, b; c; x)` evaluated through the Euler transformation.
pub fn hyp2f1_euler(p: HypParams, x: f64, ctl: SeriesControl) -> Result<f64> {
    check_argument(x)?;
    Ok((1.0 - x).powf(p.excess()) * hyp2f1_series(p.euler(), x, ctl)?)
}

/// `F(a, b; c; x)` for `x` in `[0, 1)`.
///
/// Terminating series are summed exactly. Above `x = 1/2` the Euler
/// transformation is used whenever its terms decay faster (`c - a - b < 0`)
/// or it turns the series into a polynomial.
pub fn hyp2f1(p: HypParams, x: f64, ctl: SeriesControl) -> Result<f64> {
    check_argument(x)?;
    if p.terminating_degree().is_some() {
        return hyp2f1_series(p, x, ctl);
    }
    if p.euler().terminating_degree().is_some() || (x > 0.5 && p.excess() < 0.0) {
        return hyp2f1_euler(p, x, ctl);
    }
    hyp2f1_series(p, x, ctl)
}

/// Gauss summation `F(a, b; c; 1) = Γ(c) Γ(c-a-b) / (Γ(c-a) Γ(c-b))`.
pub fn hyp2f1_at_one(p: HypParams) -> Result<f64> {
    if !(p.excess() > 0.0) {
        return Err(Error::domain(format!(
            "F(a,b;c;1) diverges for c - a - b = {} <= 0",
            p.excess()
        )));
    }
    if p.a == 0.0 || p.b == 0.0 {
        return Ok(1.0);
    }
    Ok(gamma(p.c)? * gamma(p.excess())? * recip_gamma(p.c - p.a)? * recip_gamma(p.c - p.b)?)
}

/// Taylor coefficient `(a)_n (b)_n / ((c)_n n!)` sequence, first `n` entries.
pub fn hyp2f1_coefficients(p: HypParams, n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n);
    let mut term = 1.0;
    for k in 0..n {
        out.push(term);
        let kf = k as f64;
        term *= (p.a + kf) * (p.b + kf) / ((p.c + kf) * (kf + 1.0));
    }
    out
}
