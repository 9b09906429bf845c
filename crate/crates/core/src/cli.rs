//! Command-line driver. Exit codes: 0 when every check passes, 1 when any
//! check fails or a computation breaks down, 2 on usage or configuration
//! errors.

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::report::{self, Format, VerificationReport};
use crate::schur;
use crate::suite;
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "hartogs", version, about = "Verification suites for L^p bounds of the Hartogs-triangle Bergman projection")]
pub struct Cli {
    /// Flat key = value configuration file; flags override its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Report encoding (defaults to the --out extension, then the config).
    #[arg(long, global = true)]
    pub format: Option<FormatArg>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Record per-check runtimes (output is then no longer reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaId {
    #[value(name = "2.1")]
    L21,
    #[value(name = "2.2")]
    L22,
    #[value(name = "2.3")]
    L23,
    #[value(name = "2.4")]
    L24,
    #[value(name = "2.5")]
    L25,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gamma and hypergeometric identity corpus.
    Identities,
    /// Verification suites selected by `--id`: 2.1 torus identity, 2.2
    /// weighted disk supremum, 2.3 Schur integral, 2.4 double-factor series,
    /// 2.5 projection decomposition.
    Lemma {
        #[arg(long, value_enum)]
        id: LemmaId,
        /// Exponent `a` of the torus identity (`--id 2.1`).
        #[arg(long, requires = "r2")]
        a: Option<f64>,
        /// `|z|²` of the torus identity (`--id 2.1`).
        #[arg(long, requires = "a")]
        r2: Option<f64>,
        /// Exponent `c` of the weighted supremum (`--id 2.2`).
        #[arg(long, requires = "t")]
        c: Option<f64>,
        /// Weight exponent (`--id 2.2`) or Schur exponent (`--id 2.3`).
        #[arg(long)]
        t: Option<f64>,
        /// Exponent of the decomposition checks (`--id 2.5`).
        #[arg(long)]
        p: Option<f64>,
        /// Boundary-path depth: radii `1 − 2^{−k}`, `k = 2..=depth`.
        #[arg(long)]
        depth: Option<u32>,
    },
    /// Table of the lower and upper bounds.
    Bounds {
        #[arg(long, conflicts_with_all = ["pmin", "pmax", "steps"])]
        p: Option<f64>,
        #[arg(long, requires_all = ["pmax", "steps"])]
        pmin: Option<f64>,
        #[arg(long, requires_all = ["pmin", "steps"])]
        pmax: Option<f64>,
        #[arg(long, requires_all = ["pmin", "pmax"])]
        steps: Option<usize>,
    },
    /// Norm ratios of projected test functions along a boundary path.
    LowerEstimate {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        depth: Option<u32>,
    },
    /// Remainder terms of the test-function decomposition.
    Remainder {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        depth: Option<u32>,
    },
    /// Reproducing property of the kernel on monomials.
    Project {
        #[arg(long, requires = "k")]
        j: Option<u32>,
        #[arg(long, requires = "j", allow_negative_numbers = true)]
        k: Option<i32>,
    },
    /// Every suite, written to one report.
    Report {
        #[arg(long)]
        all: bool,
    },
}

/// Output of one command: rendered text and the aggregate verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub passed: usize,
    pub total: usize,
    /// Destination file; standard output when absent.
    pub out: Option<PathBuf>,
}

impl Outcome {
    fn from_reports(reports: &[VerificationReport], cfg: &RunConfig) -> Self {
        Self {
            text: report::render(reports, cfg.format),
            passed: reports.iter().filter(|r| r.passed).count(),
            total: reports.len(),
            out: cfg.out.clone(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

fn resolve_config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    if let Some(out) = &cli.out {
        cfg.out = Some(out.clone());
    }
    let by_extension = cfg.out.as_deref().and_then(Path::extension).and_then(|e| e.to_str()).and_then(|e| e.parse().ok());
    if let Some(f) = cli.format.map(Format::from).or(by_extension) {
        cfg.format = f;
    }
    cfg.timings |= cli.timings;
    Ok(cfg)
}

fn with_depth(cfg: &RunConfig, depth: Option<u32>) -> Result<RunConfig> {
    let mut cfg = cfg.clone();
    if depth.is_some() {
        cfg.depth = depth;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Executes a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let cfg = resolve_config(cli)?;
    let reports = match &cli.command {
        Command::Identities => suite::identities(&cfg)?,
        Command::Lemma { id, a, r2, c, t, p, depth } => {
            let cfg = with_depth(&cfg, *depth)?;
            match id {
                LemmaId::L21 => suite::lemma21(&cfg, a.zip(*r2))?,
                LemmaId::L22 => suite::lemma22(&cfg, c.zip(*t))?,
                LemmaId::L23 => suite::lemma23(&cfg, *t)?,
                LemmaId::L24 => suite::lemma24(&cfg)?,
                LemmaId::L25 => suite::lemma25(&cfg, *p)?,
            }
        }
        Command::Bounds { p, pmin, pmax, steps } => {
            let grid = match (p, pmin, pmax, steps) {
                (Some(p), ..) => vec![*p],
                (None, Some(lo), Some(hi), Some(n)) => suite::p_grid(*lo, *hi, *n)?,
                _ => return Err(Error::Usage("bounds needs --p or --pmin/--pmax/--steps".into())),
            };
            let rows = schur::bounds_table(&grid)?;
            let reports = suite::bounds(&cfg, &grid)?;
            let mut outcome = Outcome::from_reports(&reports, &cfg);
            if cfg.format == Format::Csv {
                outcome.text = schur::bounds_csv(&rows);
            }
            return Ok(outcome);
        }
        Command::LowerEstimate { p, depth } => suite::lower_estimate(&with_depth(&cfg, *depth)?, *p)?,
        Command::Remainder { p, depth } => suite::remainder(&with_depth(&cfg, *depth)?, *p)?,
        Command::Project { j, k } => suite::project(&cfg, j.zip(*k))?,
        Command::Report { all } => {
            if !all {
                return Err(Error::Usage("report needs --all".into()));
            }
            suite::all(&cfg)?
        }
    };
    Ok(Outcome::from_reports(&reports, &cfg))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::Domain(_) | Error::Io(_) => 2,
        _ => 1,
    }
}

/// Parses `argv` (program name first), runs the command and writes the
/// report to `--out` or `stdout`; diagnostics go to `stderr`.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.text).map_err(Error::from),
        None => stdout.write_all(outcome.text.as_bytes()).map_err(Error::from),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    let _ = writeln!(stderr, "{}/{} checks passed", outcome.passed, outcome.total);
    if outcome.all_passed() {
        0
    } else {
        1
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
