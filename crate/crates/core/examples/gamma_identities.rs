//! Gamma function values and the classical identities it satisfies.
//!
//! cargo run --example gamma_identities

use hartogs::specfun::{gamma, identity_check, log_gamma, pochhammer, HypParams, Identity};

fn main() -> hartogs::Result<()> {
    for x in [0.5, 1.0 / 3.0, 2.5, -1.5, 100.25] {
        println!("Γ({x}) = {:.16e}   ln|Γ| = {:.12}", gamma(x)?, log_gamma(x.abs())?);
    }
    println!("(1/2)_4 = {}", pochhammer(0.5, 4));

    let unused = HypParams::new(1.0, 1.0, 2.0)?;
    for (id, x) in [(Identity::Recurrence, 7.3), (Identity::Reflection, 0.3), (Identity::Duplication, 4.1)] {
        let r = identity_check(id, unused, x, None)?;
        println!("{:<24} x = {x:<4} lhs = {:.15e}  passed = {}", r.check_id, r.computed.re(), r.passed);
    }
    match gamma(-2.0) {
        Err(e) => println!("Γ(-2): {e}"),
        Ok(v) => println!("Γ(-2) = {v}"),
    }
    Ok(())
}
