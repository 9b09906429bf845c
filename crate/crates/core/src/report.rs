//! Verification reports and their CSV / JSON encodings.
//!
//! A report either compares a computed value with a reference
//! (`passed ⇔ |computed − reference| ≤ tolerance·max(1, |reference|)`) or
//! records the outcome of a predicate, in which case `reference` is absent.

use num_complex::Complex64;
use serde_json::{json, Map, Value as Json};
use std::fmt::Write as _;

/// A real or complex result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Real(f64),
    Complex(Complex64),
}

impl Value {
    pub fn abs(&self) -> f64 {
        match *self {
            Value::Real(x) => x.abs(),
            Value::Complex(z) => z.norm(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match *self {
            Value::Real(x) => x.is_finite(),
            Value::Complex(z) => z.re.is_finite() && z.im.is_finite(),
        }
    }

    pub fn as_complex(&self) -> Complex64 {
        match *self {
            Value::Real(x) => Complex64::new(x, 0.0),
            Value::Complex(z) => z,
        }
    }

    pub fn re(&self) -> f64 {
        self.as_complex().re
    }

    pub fn distance(&self, other: &Value) -> f64 {
        (self.as_complex() - other.as_complex()).norm()
    }

    fn to_json(self) -> Json {
        match self {
            Value::Real(x) => json_number(x),
            Value::Complex(z) if z.re.is_finite() && z.im.is_finite() => {
                json!({ "re": z.re, "im": z.im })
            }
            Value::Complex(_) => Json::Null,
        }
    }

    fn to_csv(self) -> String {
        match self {
            Value::Real(x) => csv_number(x),
            Value::Complex(z) => format!("{}{:+}i", csv_number(z.re), z.im),
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<Complex64> for Value {
    fn from(z: Complex64) -> Self {
        Value::Complex(z)
    }
}

fn json_number(x: f64) -> Json {
    serde_json::Number::from_f64(x).map_or(Json::Null, Json::Number)
}

fn csv_number(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".into()
    } else if x == f64::NEG_INFINITY {
        "-inf".into()
    } else if x.is_nan() {
        "nan".into()
    } else {
        format!("{x}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub check_id: String,
    pub inputs: Vec<(String, f64)>,
    pub computed: Value,
    pub reference: Option<Value>,
    pub tolerance: f64,
    pub passed: bool,
    pub runtime_ms: u64,
    /// Named numeric series backing the verdict (path sequences, per-term
    /// ratios, ...).
    pub details: Vec<(String, Vec<f64>)>,
    pub note: Option<String>,
    /// Conjunction of the extra predicates attached with [`Self::require`].
    pub requirements: bool,
}

impl VerificationReport {
    /// Comparison against a reference value.
    pub fn compare(
        check_id: impl Into<String>,
        computed: impl Into<Value>,
        reference: impl Into<Value>,
        tolerance: f64,
    ) -> Self {
        let (computed, reference) = (computed.into(), reference.into());
        let passed = computed.is_finite()
            && computed.distance(&reference) <= tolerance * reference.abs().max(1.0);
        Self {
            check_id: check_id.into(),
            inputs: Vec::new(),
            computed,
            reference: Some(reference),
            tolerance,
            passed,
            runtime_ms: 0,
            details: Vec::new(),
            note: None,
            requirements: true,
        }
    }

    /// Outcome of a predicate over `computed` (and usually its details).
    pub fn predicate(
        check_id: impl Into<String>,
        computed: impl Into<Value>,
        tolerance: f64,
        passed: bool,
    ) -> Self {
        Self {
            check_id: check_id.into(),
            inputs: Vec::new(),
            computed: computed.into(),
            reference: None,
            tolerance,
            passed,
            runtime_ms: 0,
            details: Vec::new(),
            note: None,
            requirements: true,
        }
    }

    pub fn input(mut self, key: impl Into<String>, value: f64) -> Self {
        self.inputs.push((key.into(), value));
        self
    }

    pub fn detail(mut self, key: impl Into<String>, values: Vec<f64>) -> Self {
        self.details.push((key.into(), values));
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Combines with another predicate: the report fails if `ok` is false.
    pub fn require(mut self, ok: bool) -> Self {
        self.passed &= ok;
        self.requirements &= ok;
        self
    }

    /// Re-grades a comparison under a new tolerance; predicate reports
    /// carry their own verdict and are left unchanged.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        if let Some(r) = self.reference {
            self.tolerance = tolerance;
            self.passed = self.requirements
                && self.computed.is_finite()
                && self.computed.distance(&r) <= tolerance * r.abs().max(1.0);
        }
        self
    }

    pub fn get_input(&self, key: &str) -> Option<f64> {
        self.inputs.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }

    pub fn get_detail(&self, key: &str) -> Option<&[f64]> {
        self.details
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_slice())
    }

    /// True when the computed value is not finite (a divergent quantity or
    /// an infinite sentinel).
    pub fn unbounded(&self) -> bool {
        !self.computed.is_finite()
    }

    /// Relative discrepancy `|computed − reference| / max(1, |reference|)`.
    pub fn discrepancy(&self) -> Option<f64> {
        self.reference
            .map(|r| self.computed.distance(&r) / r.abs().max(1.0))
    }

    pub fn to_json(&self) -> Json {
        let mut inputs = Map::new();
        for (k, v) in &self.inputs {
            inputs.insert(k.clone(), json_number(*v));
        }
        let mut details = Map::new();
        for (k, v) in &self.details {
            details.insert(k.clone(), Json::Array(v.iter().map(|&x| json_number(x)).collect()));
        }
        let mut obj = Map::new();
        obj.insert("check_id".into(), json!(self.check_id));
        obj.insert("inputs".into(), Json::Object(inputs));
        obj.insert("computed".into(), self.computed.to_json());
        obj.insert(
            "reference".into(),
            self.reference.map_or(Json::Null, Value::to_json),
        );
        obj.insert("tolerance".into(), json_number(self.tolerance));
        obj.insert("passed".into(), json!(self.passed));
        obj.insert("runtime_ms".into(), json!(self.runtime_ms));
        obj.insert("unbounded".into(), json!(self.unbounded()));
        obj.insert("details".into(), Json::Object(details));
        if let Some(n) = &self.note {
            obj.insert("note".into(), json!(n));
        }
        Json::Object(obj)
    }

    /// One CSV row matching [`CSV_HEADER`]. Inputs are packed as
    /// `key=value` pairs separated by `;`.
    pub fn to_csv_row(&self) -> String {
        let inputs = self
            .inputs
            .iter()
            .map(|(k, v)| format!("{k}={}", csv_number(*v)))
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "{},{},{},{},{},{}",
            self.check_id,
            inputs,
            self.computed.to_csv(),
            self.reference.map_or(String::new(), Value::to_csv),
            csv_number(self.tolerance),
            self.passed
        )
    }
}

pub const CSV_HEADER: &str = "check_id,inputs,computed,reference,tolerance,passed";

/// Output encoding of report files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(crate::Error::Usage(format!("unknown format {other:?}"))),
        }
    }
}

pub fn to_json(reports: &[VerificationReport]) -> String {
    let arr = Json::Array(reports.iter().map(VerificationReport::to_json).collect());
    let mut s = serde_json::to_string_pretty(&arr).expect("report serialization");
    s.push('\n');
    s
}

pub fn to_csv(reports: &[VerificationReport]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in reports {
        let _ = writeln!(s, "{}", r.to_csv_row());
    }
    s
}

pub fn render(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Csv => to_csv(reports),
        Format::Json => to_json(reports),
    }
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
