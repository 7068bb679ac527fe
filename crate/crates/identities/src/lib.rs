//! A catalog of identities among Cauchy, poly-Cauchy, Stirling, Bernoulli,
//! Euler, r-Whitney and harmonic families, each an executable check over a
//! parameter grid, plus a runner that turns checks into reports.
//!
//! ```
//! use polycauchy_identities::{verify, ParameterGrid};
//! let report = verify("G04.int1", &ParameterGrid::with_max_n(10)).unwrap();
//! assert!(report.passed());
//! assert_eq!(report.points, 11);
//! ```

use std::sync::OnceLock;
use std::time::Instant;

mod case;
mod catalog;
mod grid;
mod report;

pub use case::{all, same, Body, Check, IdentityCase, Mismatch};
pub use grid::{sample_points, Dim, ParameterGrid, Point};
pub use report::{Failure, GroupTally, Report, Status, Suite, MAX_RECORDED_FAILURES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("unknown identity id {0:?}")]
    UnknownId(String),
    #[error("malformed grid: {0}")]
    MalformedGrid(String),
}

/// Every registered identity, in a fixed order grouped by `G01`..`G22`.
pub fn catalog() -> &'static [IdentityCase] {
    static CATALOG: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    CATALOG.get_or_init(catalog::build)
}

pub fn find(id: &str) -> Option<&'static IdentityCase> {
    catalog().iter().find(|c| c.id == id)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    /// Cases run on the rayon pool when the `parallel` feature is on.
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub mode: Mode,
    /// Record elapsed milliseconds. Off makes reports byte-reproducible.
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { mode: Mode::Parallel, timing: true }
    }
}

pub fn verify(id: &str, grid: &ParameterGrid) -> Result<Report, EngineError> {
    let case = find(id).ok_or_else(|| EngineError::UnknownId(id.to_string()))?;
    grid.validate()?;
    Ok(verify_case(case, grid, true))
}

/// Evaluates `case` at every point of an already validated grid.
pub fn verify_case(case: &IdentityCase, grid: &ParameterGrid, timing: bool) -> Report {
    let start = Instant::now();
    let points = case.points(grid);
    let render = |p: &Point, m: Mismatch| Failure { params: p.render(case.arity), lhs: m.lhs, rhs: m.rhs };
    let mut failures = Vec::new();
    let mut failed_points = 0;
    let mut finding = None;
    match case.body {
        Body::Identity(check) => {
            for p in &points {
                if let Err(m) = check(p) {
                    failed_points += 1;
                    if failures.len() < MAX_RECORDED_FAILURES {
                        failures.push(render(p, m));
                    }
                }
            }
        }
        Body::Probe { variants, check } => {
            let mut per_variant: Vec<Vec<Failure>> = vec![Vec::new(); variants.len()];
            for p in &points {
                for (v, c) in check(p).into_iter().enumerate() {
                    if let Err(m) = c {
                        per_variant[v].push(render(p, m));
                    }
                }
            }
            let holding: Vec<usize> = (0..variants.len()).filter(|&v| per_variant[v].is_empty()).collect();
            let tally: Vec<String> = variants
                .iter()
                .zip(&per_variant)
                .filter(|(_, f)| holding.len() != 1 || !f.is_empty())
                .map(|(name, f)| format!("{name} fails at {}/{} points", f.len(), points.len()))
                .collect();
            finding = Some(match holding.as_slice() {
                [v] => format!("{} holds at all {} points; {}", variants[*v], points.len(), tally.join("; ")),
                [] => format!("no variant holds; {}", tally.join("; ")),
                _ => format!("several variants hold; {}", tally.join("; ")),
            });
            if holding.len() != 1 && !points.is_empty() {
                let best = (0..variants.len()).min_by_key(|&v| per_variant[v].len()).unwrap_or(0);
                failed_points = per_variant[best].len().max(1);
                failures = per_variant.swap_remove(best);
                failures.truncate(MAX_RECORDED_FAILURES);
                if failures.is_empty() {
                    failures.push(Failure {
                        params: String::new(),
                        lhs: "several variants hold".into(),
                        rhs: "exactly one expected".into(),
                    });
                }
            }
        }
    }
    Report {
        id: case.id.to_string(),
        group: case.group_label(),
        status: if failures.is_empty() { Status::Pass } else { Status::Fail },
        probe: case.is_probe(),
        grid: grid.describe(),
        points: points.len(),
        failed_points,
        failures,
        finding,
        millis: timing.then(|| start.elapsed().as_millis() as u64),
    }
}

/// Runs every case of the catalog.
pub fn run_all(grid: &ParameterGrid, opts: RunOptions) -> Result<Suite, EngineError> {
    let cases: Vec<&IdentityCase> = catalog().iter().collect();
    run_cases(&cases, grid, opts)
}

/// Runs `cases`; reports come back in the order given.
pub fn run_cases(cases: &[&IdentityCase], grid: &ParameterGrid, opts: RunOptions) -> Result<Suite, EngineError> {
    grid.validate()?;
    let run = |c: &&IdentityCase| verify_case(c, grid, opts.timing);
    let reports = match opts.mode {
        Mode::Sequential => polycauchy::parallel::seq_map(cases, run),
        Mode::Parallel => polycauchy::parallel::par_map(cases, run),
    };
    Ok(Suite { reports })
}
