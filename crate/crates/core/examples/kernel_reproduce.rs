//! The Bergman kernel of the Hartogs triangle: its series, its reproducing
//! property on monomials, and the projection of a non-holomorphic function.
//!
//! cargo run --release --example kernel_reproduce

use hartogs::kernel::{
    bergman_kernel, interior_grid, kernel_series_partial, project_separable, reproduce_check, MonomialIndex, SeparableFn,
};
use hartogs::quadrature::QuadratureSpec;
use hartogs::Complex64;

fn main() -> hartogs::Result<()> {
    let grid = interior_grid();
    let (z, w) = (&grid[0], &grid[2]);
    let k = bergman_kernel(z, w)?;
    println!("K(z, w) = {k:.12}");
    for n in [4, 8, 16, 32] {
        println!("  partial sum up to {n:>2}: error {:.2e}", (kernel_series_partial(z, w, n, n as i32) - k).norm());
    }

    let spec = QuadratureSpec::default();
    for (j, kk) in [(0, 0), (0, -1), (1, -1), (2, 1)] {
        let r = reproduce_check(MonomialIndex::new(j, kk)?, &grid, &spec, 1e-6)?;
        println!("P(z1^{j} z2^{kk}) − z1^{j} z2^{kk}: max error {:.2e}", r.computed.re());
    }

    // P(w̄2) = 1/(2 z2): only the z2^{-1} mode survives
    let f = SeparableFn::new(|w2: Complex64| w2.conj(), |_| Complex64::new(1.0, 0.0));
    for z in &grid[..3] {
        let pf = project_separable(&f, z, &spec)?;
        println!("P(w̄2)(z) = {pf:.12}   1/(2 z2) = {:.12}", 0.5 / z.z2);
    }
    Ok(())
}
