//! Run reports: a deterministic section plus a separate timings section.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Text,
    Structured,
}

/// The invocation as recorded in the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub command: String,
    pub args: BTreeMap<String, String>,
    pub seed: u64,
    pub format: Format,
    pub exactness: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ItemKind {
    Classify,
    Avalues,
    Identity,
    Positivity,
    Clifford,
    Sample,
    Routes,
    Probe,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Verified,
    Failed,
    Sampled,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub id: String,
    pub kind: ItemKind,
    pub outcome: Outcome,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

impl Record {
    pub fn new(id: impl Into<String>, kind: ItemKind, outcome: Outcome, status: impl Into<String>) -> Record {
        Record {
            id: id.into(),
            kind,
            outcome,
            status: status.into(),
            method: None,
            degree: None,
            terms: None,
            seed: None,
            details: BTreeMap::new(),
        }
    }

    pub fn detail(mut self, key: &str, value: impl ToString) -> Record {
        self.details.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Usage,
    Minimality,
    Infeasible,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Usage => 2,
            ErrorKind::Minimality => 3,
            ErrorKind::Infeasible => 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunError {
    pub kind: ErrorKind,
    pub message: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub failed: usize,
    pub sampled: usize,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub config: ConfigEcho,
    pub records: Vec<Record>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<RunError>,
    pub summary: Summary,
}

/// Elapsed microseconds per record id and for the whole run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub total_us: u64,
    pub items: BTreeMap<String, u64>,
}

/// The structured document: `report` is deterministic, `timings` is not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunDocument {
    pub report: RunReport,
    pub timings: Timings,
}

/// Exit status as a function of the report content.
pub fn exit_code(records: &[Record], error: Option<&RunError>) -> i32 {
    if let Some(e) = error {
        return e.kind.exit_code();
    }
    let failed = |k: ItemKind| records.iter().any(|r| r.kind == k && r.outcome == Outcome::Failed);
    if failed(ItemKind::Avalues) {
        4
    } else if records.iter().any(|r| r.outcome == Outcome::Failed) {
        1
    } else {
        0
    }
}

pub fn tally(records: &[Record], error: Option<&RunError>) -> Summary {
    let count = |o: Outcome| records.iter().filter(|r| r.outcome == o).count();
    Summary {
        verified: count(Outcome::Verified),
        failed: count(Outcome::Failed),
        sampled: count(Outcome::Sampled),
        exit_code: exit_code(records, error),
    }
}

impl RunReport {
    /// Sorts records by id and fills in the summary.
    pub fn new(config: ConfigEcho, mut records: Vec<Record>, error: Option<RunError>) -> RunReport {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let summary = tally(&records, error.as_ref());
        RunReport {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            records,
            error,
            summary,
        }
    }

    pub fn exit_code(&self) -> i32 {
        exit_code(&self.records, self.error.as_ref())
    }

    /// Summary counts and exit code agree with the records.
    pub fn is_consistent(&self) -> bool {
        self.summary == tally(&self.records, self.error.as_ref())
    }

    pub fn deterministic_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.tool, self.version, self.config.command);
        for (k, v) in &self.config.args {
            let _ = writeln!(out, "  {k}: {v}");
        }
        let _ = writeln!(out, "  seed: {}", self.config.seed);
        for r in &self.records {
            let mut head = format!("{:<18} {:<20}", r.id, r.status);
            if let Some(m) = &r.method {
                let _ = write!(head, " method={m}");
            }
            if let Some(d) = r.degree {
                let _ = write!(head, " degree={d}");
            }
            if let Some(t) = r.terms {
                let _ = write!(head, " terms={t}");
            }
            let _ = writeln!(out, "{}", head.trim_end());
            for (k, v) in &r.details {
                let _ = writeln!(out, "    {k}: {v}");
            }
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error ({:?}): {}", e.kind, e.message);
        }
        let s = &self.summary;
        let _ = writeln!(out, "verified={} failed={} sampled={} exit={}", s.verified, s.failed, s.sampled, s.exit_code);
        out
    }
}

impl RunDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<RunDocument, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => self.to_json(),
            Format::Text => {
                let mut out = self.report.render_text();
                let _ = writeln!(out, "elapsed: {:.3} s", self.timings.total_us as f64 / 1e6);
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn echo() -> ConfigEcho {
        ConfigEcho {
            command: "verify".into(),
            args: BTreeMap::from([("scope".to_string(), "all".to_string())]),
            seed: 42,
            format: Format::Structured,
            exactness: "exact-only".into(),
        }
    }

    #[test]
    fn summary_and_exit_codes() {
        let ok = Record::new("B", ItemKind::Identity, Outcome::Verified, "verified_zero");
        let sampled = Record::new("A", ItemKind::Sample, Outcome::Sampled, "consistent");
        let rep = RunReport::new(echo(), vec![ok.clone(), sampled], None);
        assert_eq!(rep.records[0].id, "A");
        assert_eq!(rep.summary, Summary { verified: 1, failed: 0, sampled: 1, exit_code: 0 });
        let bad = Record::new("C", ItemKind::Identity, Outcome::Failed, "residual_nonzero");
        assert_eq!(RunReport::new(echo(), vec![ok.clone(), bad], None).exit_code(), 1);
        let routes = Record::new("avalues", ItemKind::Avalues, Outcome::Failed, "routes_disagree");
        assert_eq!(RunReport::new(echo(), vec![routes], None).exit_code(), 4);
        let err = RunError { kind: ErrorKind::Infeasible, message: "x".into() };
        assert_eq!(RunReport::new(echo(), vec![ok], Some(err)).exit_code(), 5);
    }

    #[test]
    fn document_round_trips() {
        let rec = Record::new("VEC1", ItemKind::Identity, Outcome::Verified, "verified_zero").detail("parts", 1);
        let doc = RunDocument {
            report: RunReport::new(echo(), vec![rec], None),
            timings: Timings { total_us: 17, items: BTreeMap::from([("VEC1".to_string(), 9)]) },
        };
        let text = doc.to_json();
        let back = RunDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), text);
        assert!(back.report.is_consistent());
    }
}
