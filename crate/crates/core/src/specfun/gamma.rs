//! Real-argument gamma function and friends.

use crate::error::{Error, Result};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
// published coefficients, kept digit for digit
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_2PI: f64 = 2.506_628_274_631_000_5;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;

/// Largest argument with a finite double-precision Γ.
pub const GAMMA_MAX_ARG: f64 = 171.624_376_956_302_7;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// `sin(pi x)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    // r in [-1, 1]; fold onto [-1/2, 1/2] using sin(pi r) = sin(pi (1 - r))
    let r = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    (PI * r).sin()
}

// Lanczos approximation, valid for x >= 0.5.
fn lanczos(x: f64) -> f64 {
    let y = x - 1.0;
    let t = y + LANCZOS_G + 0.5;
    let a = LANCZOS_COEF
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_COEF[0], |acc, (i, &c)| acc + c / (y + i as f64));
    // split the power so t^(y + 1/2) does not overflow before exp(-t) scales it
    let p = t.powf(0.5 * (y + 0.5));
    SQRT_2PI * a * p * (p * (-t).exp())
}

fn factorial(n: u32) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Γ(x) for real `x`.
///
/// Uses exact factorials at small positive integers, the Lanczos
/// approximation for `x >= 1/2`, and the reflection formula below that.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain("gamma of NaN"));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::Overflow(x));
    }
    if x == x.floor() && x <= 30.0 {
        return Ok(factorial(x as u32 - 1));
    }
    if x >= 0.5 {
        return Ok(lanczos(x));
    }
    let s = sin_pi(x);
    if 1.0 - x > GAMMA_MAX_ARG {
        // |Γ(x)| underflows; keep the sign
        return Ok(0.0 * s.signum());
    }
    Ok(PI / (s * lanczos(1.0 - x)))
}

/// 1/Γ(x), which is zero at the poles.
pub fn recip_gamma(x: f64) -> Result<f64> {
    match gamma(x) {
        Ok(g) => Ok(1.0 / g),
        Err(Error::Pole(_)) => Ok(0.0),
        Err(Error::Overflow(_)) => Ok(0.0),
        Err(e) => Err(e),
    }
}

fn stirling_ln_gamma(x: f64) -> f64 {
    let r = 1.0 / x;
    let r2 = r * r;
    // Bernoulli corrections B_{2k} / (2k (2k-1) x^{2k-1})
    let series = r
        * (1.0 / 12.0
            + r2 * (-1.0 / 360.0
                + r2 * (1.0 / 1260.0
                    + r2 * (-1.0 / 1680.0
                        + r2 * (1.0 / 1188.0 + r2 * (-691.0 / 360_360.0 + r2 / 156.0))))));
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + series
}

/// ln Γ(x) for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    if x < 0.5 {
        return Ok(gamma(1.0 + x)?.ln() - x.ln());
    }
    if x < 15.0 {
        return Ok(gamma(x)?.ln());
    }
    Ok(stirling_ln_gamma(x))
}

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)`.
pub fn pochhammer(a: f64, m: u32) -> f64 {
    (0..m).fold(1.0, |acc, i| acc * (a + i as f64))
}

/// `Γ(a) / Γ(b)` for positive arguments, through log-gamma differences.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    Ok((log_gamma(a)? - log_gamma(b)?).exp())
}
