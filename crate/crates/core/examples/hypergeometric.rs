//! Gauss hypergeometric function: series, Euler transform, the value at
//! x = 1 and the derivative identity.
//!
//! cargo run --example hypergeometric

use hartogs::specfun::{f21, gauss_sum_check, hyp2f1_at_one, identity_check, HypParams, Identity};

fn main() -> hartogs::Result<()> {
    // F(1, 1; 2; x) = −ln(1 − x)/x
    for x in [0.1, 0.5, 0.9, 0.999] {
        println!("F(1,1;2;{x}) = {:.15}   closed form {:.15}", f21(1.0, 1.0, 2.0, x)?, -(-x).ln_1p() / x);
    }
    let p = HypParams::new(0.5, 0.5, 2.0)?;
    println!("F(1/2,1/2;2;1) = {:.15} (4/π = {:.15})", hyp2f1_at_one(p)?, 4.0 / std::f64::consts::PI);
    let g = gauss_sum_check(p, None)?;
    println!("extrapolated to x = 1: {:.10}  passed = {}", g.computed.re(), g.passed);

    let q = HypParams::new(0.3, 1.2, 2.7)?;
    for id in [Identity::EulerTransform, Identity::IntegralRep, Identity::Derivative(1)] {
        let r = identity_check(id, q, 0.8, None)?;
        println!("{:<26} {:.15}  vs {:.15}  tol {:e}", r.check_id, r.computed.re(), r.reference.unwrap().re(), r.tolerance);
    }
    Ok(())
}
