//! Norm ratios ‖P f_ξ‖_p / ‖f_ξ‖_p for the extremal test functions along
//! the boundary path, against the lower bound Γ²(2/p)Γ²(2/q).
//!
//! cargo run --release --example lower_ratio [p] [depth]

use hartogs::lowerbound::{ratio_path, BoundaryPath, DEFAULT_CAP};
use hartogs::quadrature::QuadratureSpec;

fn main() -> hartogs::Result<()> {
    let mut args = std::env::args().skip(1);
    let p: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3.0);
    let depth: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let path = BoundaryPath::new(depth)?;
    let r = ratio_path(p, path, &QuadratureSpec::default(), DEFAULT_CAP)?;
    let ratios = r.get_detail("ratios").unwrap();
    for (radius, ratio) in path.radii().iter().zip(ratios) {
        println!("|ξ2| = {radius:<10} ratio {ratio:.6}");
    }
    println!("lower bound {:.7}", r.reference.unwrap().re());
    Ok(())
}
