//! Running a suite with a configuration and writing its report as CSV and
//! JSON.
//!
//! cargo run --example verification_report

use hartogs::config::RunConfig;
use hartogs::report::{render, Format};
use hartogs::suite;

fn main() -> hartogs::Result<()> {
    let mut cfg = RunConfig::default();
    cfg.apply_text("tolerance.lemma2.1.torus = 1e-10\n")?;
    let reports = suite::lemma21(&cfg, None)?;
    print!("{}", render(&reports, Format::Csv));
    println!("{}", render(&reports[..1], Format::Json));
    Ok(())
}
