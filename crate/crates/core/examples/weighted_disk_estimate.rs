//! The weighted disk integral (1−|z|²)^c ∫ (1−|w|²)^t |1 − z w̄|^{−(2+t+c)} dν
//! approaching its supremum Γ(t+1)Γ(c)/Γ²((2+t+c)/2) toward the circle.
//!
//! cargo run --release --example weighted_disk_estimate

use hartogs::lowerbound::BoundaryPath;
use hartogs::quadrature::QuadratureSpec;
use hartogs::schur::{forelli_rudin_closed, forelli_rudin_sup};

fn main() -> hartogs::Result<()> {
    let spec = QuadratureSpec::default();
    let path = BoundaryPath::new(8)?;
    for (c, t) in [(1.0, 0.0), (0.5, 0.5), (1.5, -0.5)] {
        let r = forelli_rudin_sup(c, t, path, &spec)?;
        let values = r.get_detail("path").unwrap();
        println!("c = {c}, t = {t}: closed form {:.6}", forelli_rudin_closed(c, t)?);
        for (radius, v) in path.radii().iter().zip(values) {
            println!("  |z| = {radius:<10} {v:.6}");
        }
    }
    Ok(())
}
