//! Check reports and their JSON-lines / text rendering.

use std::fmt;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The instance does not meet the hypotheses, or lies outside a cap.
    Skipped,
    SkippedBudget,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::SkippedBudget => "skipped-budget",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One theorem checked on one instance. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub theorem: String,
    pub instance: String,
    pub status: Status,
    pub witness: Option<Value>,
    pub millis: u64,
    pub seed: Option<u64>,
    /// Observed values, or the reason for a skip.
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl CheckReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text_line(&self) -> String {
        let mut line = format!("{:<12} {:<15} {:<36} {}", self.theorem, self.status, self.instance, self.detail);
        if self.millis > 0 {
            line.push_str(&format!(" ({} ms)", self.millis));
        }
        line.trim_end().to_string()
    }
}

/// Writes one line per report.
pub fn write_report<W: Write + ?Sized>(out: &mut W, reports: &[CheckReport], format: Format) -> io::Result<()> {
    for r in reports {
        match format {
            Format::Json => writeln!(out, "{}", r.to_json_line())?,
            Format::Text => writeln!(out, "{}", r.to_text_line())?,
        }
    }
    Ok(())
}

/// Counts per status, in [`Status`] order.
pub fn tally(reports: &[CheckReport]) -> [(Status, usize); 4] {
    [Status::Pass, Status::Fail, Status::Skipped, Status::SkippedBudget]
        .map(|s| (s, reports.iter().filter(|r| r.status == s).count()))
}

/// 1 if anything failed, else 3 if a budget ran out, else 0.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else if reports.iter().any(|r| r.status == Status::SkippedBudget) {
        3
    } else {
        0
    }
}
