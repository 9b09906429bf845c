//! Quadrature on the unit disk: plain, weighted and focused toward a
//! point near the circle.
//!
//! cargo run --example disk_quadrature

use hartogs::quadrature::{integrate_disk, DiskRule, Focus, QuadratureSpec, RadialWeight};
use hartogs::Complex64;

fn main() -> hartogs::Result<()> {
    let spec = QuadratureSpec::default();
    let m = integrate_disk(|z| z * z.conj() * z * z.conj(), &spec)?;
    println!("∫ |z|^4 dν = {:.16} (exact 1/3)", m.re);

    // ∫ |z|^{-1} (1 − |z|²)^{-1/2} dν = B(1/2, 1/2) = π
    let weighted = DiskRule::new(&spec, RadialWeight::new(-0.5, -0.5), &[])?;
    println!("weighted mass = {:.16} (exact π)", weighted.integrate_real(|_| 1.0)?);

    for r in [0.9, 0.99, 0.999] {
        let w = Complex64::new(0.0, r);
        let exact = -(-r * r).ln_1p() / (r * r);
        let plain = DiskRule::standard(&spec)?.integrate_real(|z| 1.0 / (1.0 - z * w.conj()).norm_sqr())?;
        let focused = DiskRule::new(&spec, RadialWeight::NONE, &[Focus::toward(w)])?
            .integrate_real(|z| 1.0 / (1.0 - z * w.conj()).norm_sqr())?;
        println!(
            "|w| = {r}: plain rel. error {:.1e}, focused rel. error {:.1e}",
            (plain / exact - 1.0).abs(),
            (focused / exact - 1.0).abs()
        );
    }
    Ok(())
}
