//! Run configuration: quadrature defaults, series controls, path depth,
//! per-check tolerance overrides and output settings.
//!
//! The optional config file is flat `key = value` text; `#` starts a
//! comment. Recognised keys:
//!
//! ```text
//! radial_nodes = 16
//! angular_nodes = 64
//! panels = 12
//! grading = 2
//! rel_tol = 1e-14
//! cap = 131072
//! depth = 6
//! format = csv
//! out = report.csv
//! timings = false
//! tolerance.lemma2.3.sup = 0.05
//! ```

use crate::error::{Error, Result};
use crate::lowerbound::DEFAULT_CAP;
use crate::quadrature::QuadratureSpec;
use crate::report::{Format, VerificationReport};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub spec: QuadratureSpec,
    /// Relative tail tolerance for truncated series.
    pub rel_tol: f64,
    /// Cap on factor-series length.
    pub cap: usize,
    /// Path depth; `None` leaves each command its own default.
    pub depth: Option<u32>,
    /// Tolerance overrides keyed by check id.
    pub tolerances: BTreeMap<String, f64>,
    pub format: Format,
    pub out: Option<PathBuf>,
    /// Record wall-clock runtimes in reports (off by default so that
    /// output is reproducible byte for byte).
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            spec: QuadratureSpec::default(),
            rel_tol: 1e-14,
            cap: DEFAULT_CAP,
            depth: None,
            tolerances: BTreeMap::new(),
            format: Format::Csv,
            out: None,
            timings: false,
        }
    }
}

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Usage(format!("invalid value {value:?} for {key}")))
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let mut cfg = Self::default();
        cfg.apply_text(&text)?;
        Ok(cfg)
    }

    /// Applies `key = value` lines on top of the current values.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Usage(format!("config line {}: expected key = value", n + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        self.validate()
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "radial_nodes" => self.spec.radial_nodes = parse(key, value)?,
            "angular_nodes" => self.spec.angular_nodes = parse(key, value)?,
            "panels" => self.spec.panels = parse(key, value)?,
            "grading" => self.spec.grading = parse(key, value)?,
            "rel_tol" => self.rel_tol = parse(key, value)?,
            "cap" => self.cap = parse(key, value)?,
            "depth" => self.depth = Some(parse(key, value)?),
            "format" => self.format = parse(key, value)?,
            "out" => self.out = Some(PathBuf::from(value)),
            "timings" => self.timings = parse(key, value)?,
            _ => match key.strip_prefix("tolerance.") {
                Some(id) if !id.is_empty() => {
                    self.tolerances.insert(id.to_string(), parse(key, value)?);
                }
                _ => return Err(Error::Usage(format!("unknown config key {key:?}"))),
            },
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.spec.validate().map_err(|e| Error::Usage(e.to_string()))?;
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::Usage(format!("rel_tol = {} must lie in (0, 1)", self.rel_tol)));
        }
        if self.cap < 64 {
            return Err(Error::Usage(format!("cap = {} must be at least 64", self.cap)));
        }
        if let Some(d) = self.depth {
            if !(2..=52).contains(&d) {
                return Err(Error::Usage(format!("depth = {d} must lie in 2..=52")));
            }
        }
        if let Some((id, t)) = self.tolerances.iter().find(|(_, t)| !(**t > 0.0)) {
            return Err(Error::Usage(format!("tolerance for {id} must be positive, got {t}")));
        }
        Ok(())
    }

    pub fn depth_or(&self, default: u32) -> u32 {
        self.depth.unwrap_or(default)
    }

    /// Re-grades comparison reports whose check id has an override.
    pub fn apply_overrides(&self, reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
        reports
            .into_iter()
            .map(|r| match self.tolerances.get(&r.check_id) {
                Some(&t) => r.with_tolerance(t),
                None => r,
            })
            .collect()
    }
}
