//! Machine-readable run reports.
//!
//! The JSON layout is stable: a top-level object with `version`,
//! `defaults`, and an ordered `results` list. Witness values are decimal
//! strings so consumers never depend on integer width. Two runs with the
//! same parameters produce byte-identical JSON except for the
//! `elapsedMillis` fields.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of a single named check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    #[serde(rename = "checkName")]
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, String>>,
    #[serde(rename = "elapsedMillis")]
    pub elapsed_millis: u64,
    /// Extra human-readable output (matrices, counts); not part of the
    /// JSON schema.
    #[serde(skip)]
    pub details: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// The full report written by `check all --report`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub version: String,
    pub defaults: BTreeMap<String, u64>,
    pub results: Vec<CheckResult>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}
