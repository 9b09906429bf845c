//! Integration over the Hartogs triangle {|z1| < |z2| < 1} and the norms
//! of its monomials.
//!
//! cargo run --example hartogs_integral

use hartogs::kernel::MonomialIndex;
use hartogs::quadrature::{integrate_hartogs, HartogsPoint, QuadratureSpec};
use hartogs::Complex64;

fn main() -> hartogs::Result<()> {
    let spec = QuadratureSpec::new(8, 16, 2, 1.0)?;
    let volume = integrate_hartogs(|_| Complex64::new(1.0, 0.0), &spec)?;
    println!("μ(H) = {:.15}", volume.re);
    for (j, k) in [(0, -1), (0, 0), (1, -1), (2, 1), (3, -4)] {
        let m = MonomialIndex::new(j, k)?;
        let q = integrate_hartogs(|z: &HartogsPoint| Complex64::new(m.eval(z).norm_sqr(), 0.0), &spec)?;
        println!("‖z1^{j} z2^{k}‖² = {:.15}  exact {:.15}", q.re, m.norm_sq());
    }
    println!("z1^1 z2^-3: {}", MonomialIndex::new(1, -3).unwrap_err());
    Ok(())
}
