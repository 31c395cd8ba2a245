use std::fmt::Write as _;

use serde::Serialize;

use crate::verify::{CheckResult, SmoothnessReport};

/// Schema version written to every JSON report.
pub const REPORT_SCHEMA: u32 = 1;

/// Timestamp written under `--fixed-timestamp`.
pub const FIXED_TIMESTAMP: &str = "1970-01-01T00:00:00Z";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub engine: String,
    pub timestamp: String,
    pub algebra: String,
    pub degree_bound: u32,
    pub checks: Vec<CheckRecord>,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: String,
    pub detail: String,
    pub witness: Option<WitnessRecord>,
    pub data: Option<DataRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub element: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DataRecord {
    pub label: String,
    pub values: Vec<i64>,
}

pub fn engine_version() -> String {
    format!("ncsmooth {}", env!("CARGO_PKG_VERSION"))
}

/// Current UTC time in RFC 3339, whole seconds.
pub fn now_timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

impl ReportDocument {
    pub fn new(report: &SmoothnessReport, timestamp: impl Into<String>) -> Self {
        ReportDocument {
            schema: REPORT_SCHEMA,
            engine: engine_version(),
            timestamp: timestamp.into(),
            algebra: report.algebra.clone(),
            degree_bound: report.degree_bound,
            checks: report.checks.iter().map(record).collect(),
            verdict: report.verdict.to_string(),
        }
    }
}

fn record(c: &CheckResult) -> CheckRecord {
    CheckRecord {
        name: c.name.clone(),
        status: c.status.to_string(),
        detail: c.detail.clone(),
        witness: c.witness.as_ref().map(|w| WitnessRecord {
            element: w.element.clone(),
            value: w.value.clone(),
        }),
        data: c.data.as_ref().map(|d| DataRecord {
            label: d.label.clone(),
            values: d.values.clone(),
        }),
    }
}

/// Renders a report. Text carries no timestamp; JSON is pretty-printed
/// with a trailing newline.
pub fn emit_report(report: &SmoothnessReport, format: Format, timestamp: &str) -> Vec<u8> {
    match format {
        Format::Json => {
            let doc = ReportDocument::new(report, timestamp);
            let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "{} report for {} (degree bound {})",
                engine_version(),
                report.algebra,
                report.degree_bound
            )
            .unwrap();
            for c in &report.checks {
                write!(s, "[{}] {}: {}", c.status, c.name, c.detail).unwrap();
                if let Some(w) = &c.witness {
                    write!(s, " | witness {} -> {}", w.element, w.value).unwrap();
                }
                if let Some(d) = &c.data {
                    let vals: Vec<String> = d.values.iter().map(i64::to_string).collect();
                    write!(s, " | {}: [{}]", d.label, vals.join(", ")).unwrap();
                }
                s.push('\n');
            }
            writeln!(s, "verdict: {}", report.verdict).unwrap();
            s.into_bytes()
        }
    }
}
