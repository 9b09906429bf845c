//! Real-argument special functions: Γ, log Γ, Pochhammer symbols and the
//! Gauss hypergeometric function, with a corpus of classical identities
//! usable as self-checks.

mod gamma;
mod hyp;
mod identities;

pub use gamma::{gamma, gamma_ratio, log_gamma, pochhammer, recip_gamma, sin_pi, GAMMA_MAX_ARG};
pub use hyp::{
    hyp2f1, hyp2f1_at_one, hyp2f1_coefficients, hyp2f1_euler, hyp2f1_series, HypParams,
    SeriesControl,
};
pub use identities::{gauss_sum_check, identity_check, identity_suite, Identity};

/// `F(a, b; c; x)` with default series control.
pub fn f21(a: f64, b: f64, c: f64, x: f64) -> crate::Result<f64> {
    hyp2f1(HypParams::new(a, b, c)?, x, SeriesControl::default())
}
