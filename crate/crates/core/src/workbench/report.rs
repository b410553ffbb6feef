use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::audit::Audit;
use crate::error::Error;
use crate::stability::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Parameters in force for a check: caps, truncation bounds, corpus sizes.
pub type Bounds = BTreeMap<String, Value>;

/// One line of a suite's output. A `fail` always carries at least one witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub space_hash: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Value>,
    pub bounds: Bounds,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn from_audit(check: &str, space_hash: &str, audit: &Audit, mut bounds: Bounds) -> Self {
        bounds.insert("cases".into(), json!(audit.cases));
        let (verdict, witnesses) = if audit.passed() {
            (Verdict::Pass, vec![])
        } else {
            bounds.insert("violations".into(), json!(audit.violation_count));
            let mut w: Vec<Value> = audit
                .violations
                .iter()
                .map(|v| json!({ "rule": v.rule, "witness": v.witness }))
                .collect();
            if w.is_empty() {
                w.push(json!({ "violations": audit.violation_count }));
            }
            (Verdict::Fail, w)
        };
        CheckReport {
            check: check.into(),
            space_hash: space_hash.into(),
            verdict,
            witnesses,
            bounds,
            runtime_ms: 0,
        }
    }

    pub fn from_outcome(check: &str, space_hash: &str, outcome: &Outcome, mut bounds: Bounds) -> Self {
        if !outcome.notes.is_empty() {
            bounds.insert("notes".into(), json!(outcome.notes));
        }
        match &outcome.skipped {
            Some(reason) => Self::skipped(check, space_hash, reason, bounds),
            None => Self::from_audit(check, space_hash, &outcome.audit, bounds),
        }
    }

    pub fn skipped(check: &str, space_hash: &str, reason: &str, mut bounds: Bounds) -> Self {
        bounds.insert("skip_reason".into(), json!(reason));
        CheckReport {
            check: check.into(),
            space_hash: space_hash.into(),
            verdict: Verdict::Skipped,
            witnesses: vec![],
            bounds,
            runtime_ms: 0,
        }
    }

    /// A cap refusal is a skip; any other error is a failure witnessed by its message.
    pub fn from_error(check: &str, space_hash: &str, err: &Error, bounds: Bounds) -> Self {
        if matches!(err, Error::CapExceeded { .. }) {
            return Self::skipped(check, space_hash, &err.to_string(), bounds);
        }
        CheckReport {
            check: check.into(),
            space_hash: space_hash.into(),
            verdict: Verdict::Fail,
            witnesses: vec![json!({ "error": err.to_string() })],
            bounds,
            runtime_ms: 0,
        }
    }

    pub fn with_runtime(mut self, ms: u64) -> Self {
        self.runtime_ms = ms;
        self
    }
}

/// Canonical order: by check id, then space hash.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| (&a.check, &a.space_hash).cmp(&(&b.check, &b.space_hash)));
}

pub fn any_failed(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| r.verdict == Verdict::Fail)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(Format::Json),
            "table" => Ok(Format::Table),
            other => Err(Error::InvalidArgument(format!("unknown format `{other}`"))),
        }
    }
}

pub fn emit_report(reports: &[CheckReport], format: Format) -> String {
    match format {
        Format::Json => emit_json(reports),
        Format::Table => emit_table(reports),
    }
}

/// Pretty JSON array, newline-terminated. Object keys are sorted.
pub fn emit_json(reports: &[CheckReport]) -> String {
    let mut out = serde_json::to_string_pretty(reports).expect("reports serialize");
    out.push('\n');
    out
}

pub fn emit_table(reports: &[CheckReport]) -> String {
    let width = reports.iter().map(|r| r.check.len()).max().unwrap_or(5).max(5);
    let mut out = format!("{:<width$}  {:<7}  {:<12}  {:>9}  {:>10}\n", "check", "verdict", "space", "witnesses", "runtime_ms");
    for r in reports {
        out.push_str(&format!(
            "{:<width$}  {:<7}  {:<12}  {:>9}  {:>10}\n",
            r.check,
            r.verdict.to_string(),
            &r.space_hash[..r.space_hash.len().min(12)],
            r.witnesses.len(),
            r.runtime_ms
        ));
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    out.push_str(&format!(
        "{} pass, {} fail, {} skipped\n",
        count(Verdict::Pass),
        count(Verdict::Fail),
        count(Verdict::Skipped)
    ));
    out
}

pub fn sha256_hex(text: &str) -> String {
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

/// Hash of the reports with `runtime_ms` left out.
pub fn determinism_digest(reports: &[CheckReport]) -> String {
    let stripped: Vec<CheckReport> = reports.iter().cloned().map(|r| r.with_runtime(0)).collect();
    sha256_hex(&emit_json(&stripped))
}
