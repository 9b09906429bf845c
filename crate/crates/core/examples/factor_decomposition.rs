//! The projected one-disk test function as a power series, split into its
//! closed-form part Φ and the two remainders Ψ and Υ.
//!
//! cargo run --release --example factor_decomposition

use hartogs::lowerbound::{CoefficientSequence, FactorTable, DEFAULT_CAP};
use hartogs::Complex64;

fn main() -> hartogs::Result<()> {
    let p = 3.0;
    let eps = CoefficientSequence::epsilon(p, 8)?;
    let shown: Vec<String> = eps.values.iter().map(|e| format!("{e:.3e}")).collect();
    println!("ε_k, p = 3: {}", shown.join(" "));
    for m in [0.5, 0.9, 0.99] {
        let table = FactorTable::new(p, Complex64::new(m, 0.0), DEFAULT_CAP)?;
        let zeta = Complex64::new(0.0, m);
        let v = table.all(zeta)?;
        println!(
            "|ξ| = {m}: {} terms, Φ = {:.6}, Ψ = {:.6}, Υ = {:.6}, sum − series = {:.1e}",
            table.len(),
            v.phi,
            v.psi,
            v.ups,
            (v.sum() - table.proj(zeta)?).norm()
        );
    }
    Ok(())
}
