//! Verification reports and their text encodings.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The two computed sides of a failing identity, as canonical text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub id: String,
    pub anchor: String,
    pub params: Vec<(String, String)>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReportEntry {
    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdSummary {
    pub id: String,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub by_id: Vec<IdSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub registry_version: u32,
    pub entries: Vec<ReportEntry>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts entries by id (stable, so parameter order within an id is kept)
    /// and tallies the summary from them.
    pub fn from_entries(registry_version: u32, mut entries: Vec<ReportEntry>) -> Self {
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        let mut by_id: Vec<IdSummary> = Vec::new();
        for e in &entries {
            if by_id.last().map(|s| s.id != e.id).unwrap_or(true) {
                by_id.push(IdSummary { id: e.id.clone(), passed: 0, failed: 0 });
            }
            let s = by_id.last_mut().expect("pushed above");
            match e.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
            }
        }
        let passed = by_id.iter().map(|s| s.passed).sum();
        let failed = by_id.iter().map(|s| s.failed).sum();
        Self {
            registry_version,
            summary: Summary { total: entries.len(), passed, failed, by_id },
            entries,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&JsonReport::from(self)).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| id | params | status | lhs | rhs | note |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        for e in &self.entries {
            let (lhs, rhs) = witness_cells(e);
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                e.id,
                e.params_text(),
                status_text(e.status),
                lhs,
                rhs,
                e.note.as_deref().unwrap_or("").replace('|', "\\|"),
            );
        }
        out.push('\n');
        out.push_str("| id | passed | failed |\n|---|---|---|\n");
        for s in &self.summary.by_id {
            let _ = writeln!(out, "| {} | {} | {} |", s.id, s.passed, s.failed);
        }
        let _ = writeln!(
            out,
            "\ntotal {}: {} passed, {} failed",
            self.summary.total, self.summary.passed, self.summary.failed
        );
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,params,status,lhs,rhs,note\n");
        for e in &self.entries {
            let (lhs, rhs) = witness_cells(e);
            let row = [
                e.id.as_str(),
                &e.params_text(),
                status_text(e.status),
                &lhs,
                &rhs,
                e.note.as_deref().unwrap_or(""),
            ];
            out.push_str(&row.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

fn witness_cells(e: &ReportEntry) -> (String, String) {
    e.witness
        .as_ref()
        .map(|w| (w.lhs.clone(), w.rhs.clone()))
        .unwrap_or_default()
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Serialized shape: params become an ordered object.
#[derive(Serialize)]
struct JsonReport<'a> {
    registry_version: u32,
    summary: &'a Summary,
    entries: Vec<JsonEntry<'a>>,
}

#[derive(Serialize)]
struct JsonEntry<'a> {
    id: &'a str,
    anchor: &'a str,
    params: serde_json::Map<String, serde_json::Value>,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a WitnessPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

impl<'a> From<&'a VerificationReport> for JsonReport<'a> {
    fn from(r: &'a VerificationReport) -> Self {
        JsonReport {
            registry_version: r.registry_version,
            summary: &r.summary,
            entries: r
                .entries
                .iter()
                .map(|e| JsonEntry {
                    id: &e.id,
                    anchor: &e.anchor,
                    params: e
                        .params
                        .iter()
                        .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                        .collect(),
                    status: e.status,
                    witness: e.witness.as_ref(),
                    note: e.note.as_deref(),
                })
                .collect(),
        }
    }
}
