//! Machine-readable verification reports: per-check status, failure lists,
//! optional homology tables, and merging for the report command.

use serde::{Deserialize, Serialize};

use crate::complex::Simplex;
use crate::homology::HomologyGroup;
use crate::{Error, Result};

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One named check inside a suite. Skipped means a cap was hit, not a
/// failure.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

/// A single offending object and why it failed.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct Failure {
    pub cell: String,
    pub reason: String,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct HomologyRow {
    pub degree: usize,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

pub fn homology_rows(groups: &[HomologyGroup]) -> Vec<HomologyRow> {
    groups
        .iter()
        .enumerate()
        .map(|(degree, g)| HomologyRow { degree, rank: g.rank, torsion: g.torsion.clone() })
        .collect()
}

/// One collapse step, for audit dumps.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CollapseStep {
    pub free_face: Simplex,
    pub coface: Simplex,
}

/// Outcome of one verification suite. Wall time sits in its own field so
/// that the rest of the report is byte-stable across runs.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub proposition: String,
    pub n: u32,
    pub cells_checked: u64,
    pub checks: Vec<Check>,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub homology: Option<Vec<HomologyRow>>,
    #[serde(default)]
    pub wall_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: &str, proposition: &str, n: u32) -> VerificationReport {
        VerificationReport {
            suite: suite.into(),
            proposition: proposition.into(),
            n,
            cells_checked: 0,
            checks: Vec::new(),
            failures: Vec::new(),
            homology: None,
            wall_ms: 0,
        }
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        });
    }

    pub fn skip(&mut self, name: &str, why: String) {
        self.checks.push(Check { name: name.into(), status: Status::Skipped, detail: Some(why) });
    }

    pub fn fail(&mut self, cell: String, reason: String) {
        self.failures.push(Failure { cell, reason });
    }

    /// A report passes when nothing failed; skipped checks do not count
    /// against it.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<VerificationReport> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad report: {e}")))
    }
}

/// Merge of several reports: per-suite counts and an overall verdict.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MergedReport {
    pub suites: Vec<SuiteSummary>,
    pub passed: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SuiteSummary {
    pub suite: String,
    pub n: u32,
    pub cells_checked: u64,
    pub passes: usize,
    pub fails: usize,
    pub skips: usize,
    pub failures: usize,
    pub passed: bool,
}

pub fn merge_reports(reports: &[VerificationReport]) -> Result<MergedReport> {
    if reports.is_empty() {
        return Err(Error::InvalidParameter("no reports to merge".into()));
    }
    let suites: Vec<SuiteSummary> = reports
        .iter()
        .map(|r| SuiteSummary {
            suite: r.suite.clone(),
            n: r.n,
            cells_checked: r.cells_checked,
            passes: r.checks.iter().filter(|c| c.status == Status::Pass).count(),
            fails: r.checks.iter().filter(|c| c.status == Status::Fail).count(),
            skips: r.checks.iter().filter(|c| c.status == Status::Skipped).count(),
            failures: r.failures.len(),
            passed: r.passed(),
        })
        .collect();
    let passed = suites.iter().all(|s| s.passed);
    Ok(MergedReport { suites, passed })
}
