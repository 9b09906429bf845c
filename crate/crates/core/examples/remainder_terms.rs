//! The eight cross terms of the projected test function relative to
//! ‖f_ξ‖_p at successive path depths.
//!
//! cargo run --release --example remainder_terms

use hartogs::lowerbound::{remainder_terms, term_name, BoundaryPath, DEFAULT_CAP, REMAINDER_TERMS};
use hartogs::quadrature::QuadratureSpec;

fn main() -> hartogs::Result<()> {
    let spec = QuadratureSpec::default();
    let names: Vec<String> = REMAINDER_TERMS.iter().map(|&(a, b)| term_name(a, b)).collect();
    println!("depth {}", names.iter().map(|n| format!("{n:>17}")).collect::<String>());
    for k in 3..=5 {
        let r = remainder_terms(&BoundaryPath::point(k), 3.0, &spec, DEFAULT_CAP)?;
        let row: String = names
            .iter()
            .map(|n| format!("{:>17.4}", r.get_detail(n).map_or(f64::NAN, |d| d[0])))
            .collect();
        println!("{k:>5} {row}");
    }
    Ok(())
}
