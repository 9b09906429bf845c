//! Lower and upper bounds of the projection norm on L^p, as a CSV table.
//!
//! cargo run --example bounds_table

use hartogs::schur::{bounds_csv, bounds_table};
use hartogs::suite::p_grid;

fn main() -> hartogs::Result<()> {
    let rows = bounds_table(&p_grid(1.5, 3.5, 8)?)?;
    print!("{}", bounds_csv(&rows));
    Ok(())
}
