//! The weighted kernel integral T_t(z) behind the Schur test, its radial
//! closed form and its approach to π²/sin²(πt) along the boundary path.
//!
//! cargo run --release --example schur_sup

use hartogs::lowerbound::BoundaryPath;
use hartogs::quadrature::QuadratureSpec;
use hartogs::schur::{i_closed, i_numeric, schur_constant, schur_sup_estimate};

fn main() -> hartogs::Result<()> {
    let spec = QuadratureSpec::default();
    for r in [0.1, 0.5, 0.9] {
        println!("I({r}, 0.75): closed {:.12}  quadrature {:.12}", i_closed(r, 0.75)?, i_numeric(r, 0.75, &spec)?);
    }
    let t = 0.75;
    let report = schur_sup_estimate(t, BoundaryPath::new(7)?, &spec)?;
    let path = report.get_detail("path").unwrap();
    println!("T_{t} along the path: {path:.4?}");
    println!("constant π²/sin²(πt) = {:.6}, passed = {}", schur_constant(t)?, report.passed);
    Ok(())
}
