use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Failures kept per report; `failed_points` still counts all of them.
pub const MAX_RECORDED_FAILURES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub id: String,
    pub group: String,
    pub status: Status,
    pub probe: bool,
    pub grid: String,
    pub points: usize,
    pub failed_points: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finding: Option<String>,
    /// Elapsed wall time; `None` when the run was asked to be reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Reports of one run, in catalog order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Suite {
    pub reports: Vec<Report>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupTally {
    pub cases: usize,
    pub passed: usize,
    pub points: usize,
}

impl Suite {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Report> {
        self.reports.iter().filter(|r| !r.passed())
    }

    pub fn by_group(&self) -> BTreeMap<String, GroupTally> {
        let mut out: BTreeMap<String, GroupTally> = BTreeMap::new();
        for r in &self.reports {
            let t = out.entry(r.group.clone()).or_default();
            t.cases += 1;
            t.points += r.points;
            if r.passed() {
                t.passed += 1;
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.reports).expect("reports serialize")
    }

    /// Human-readable summary: per-group counts, probe findings, failures.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for (g, t) in self.by_group() {
            let _ = writeln!(s, "{g}  {}/{} cases passed  {} points", t.passed, t.cases, t.points);
        }
        for r in self.reports.iter().filter(|r| r.probe) {
            if let Some(f) = &r.finding {
                let _ = writeln!(s, "probe {}: {f}", r.id);
            }
        }
        for r in self.failed() {
            let _ = writeln!(s, "FAIL {}  {} of {} points", r.id, r.failed_points, r.points);
            if let Some(f) = r.failures.first() {
                let _ = writeln!(s, "  at {}: lhs = {}, rhs = {}", f.params, f.lhs, f.rhs);
            }
        }
        let passed = self.reports.iter().filter(|r| r.passed()).count();
        let points: usize = self.reports.iter().map(|r| r.points).sum();
        let _ = writeln!(s, "total  {passed}/{} cases passed  {points} points", self.reports.len());
        s
    }
}
