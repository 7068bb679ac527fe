use std::fmt::Display;

use serde::Serialize;

use crate::grid::{enumerate, Dim, ParameterGrid, Point};

/// Both sides of an identity that disagreed at a point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub lhs: String,
    pub rhs: String,
}

impl From<polycauchy::Error> for Mismatch {
    fn from(e: polycauchy::Error) -> Self {
        Mismatch { lhs: format!("error: {e}"), rhs: String::new() }
    }
}

pub type Check = Result<(), Mismatch>;

/// Passes when `lhs == rhs`, otherwise records both sides.
pub fn same<T: PartialEq + Display>(lhs: T, rhs: T) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Mismatch { lhs: lhs.to_string(), rhs: rhs.to_string() })
    }
}

/// First failure among several equalities that must all hold.
pub fn all<I: IntoIterator<Item = Check>>(checks: I) -> Check {
    checks.into_iter().collect()
}

pub type CheckFn = fn(&Point) -> Check;
pub type ProbeFn = fn(&Point) -> Vec<Check>;

#[derive(Clone, Copy)]
pub enum Body {
    Identity(CheckFn),
    /// Competing readings of one statement; each point yields one check per variant.
    Probe { variants: &'static [&'static str], check: ProbeFn },
}

/// One registered identity.
#[derive(Clone)]
pub struct IdentityCase {
    pub id: &'static str,
    pub description: &'static str,
    pub arity: &'static [Dim],
    /// Uses the nested-sum `n` range.
    pub double: bool,
    pub min_n: usize,
    pub when: Option<fn(&Point) -> bool>,
    pub body: Body,
}

impl IdentityCase {
    pub fn new(id: &'static str, description: &'static str, arity: &'static [Dim], check: CheckFn) -> Self {
        IdentityCase {
            id,
            description,
            arity,
            double: false,
            min_n: 0,
            when: None,
            body: Body::Identity(check),
        }
    }

    pub fn probe(
        id: &'static str,
        description: &'static str,
        arity: &'static [Dim],
        variants: &'static [&'static str],
        check: ProbeFn,
    ) -> Self {
        IdentityCase { body: Body::Probe { variants, check }, ..IdentityCase::new(id, description, arity, |_| Ok(())) }
    }

    pub fn double(mut self) -> Self {
        self.double = true;
        self
    }

    pub fn min_n(mut self, n: usize) -> Self {
        self.min_n = n;
        self
    }

    pub fn when(mut self, f: fn(&Point) -> bool) -> Self {
        self.when = Some(f);
        self
    }

    /// Group number parsed from the `Gnn.` prefix of the id.
    pub fn group(&self) -> u8 {
        self.id.get(1..3).and_then(|g| g.parse().ok()).unwrap_or(0)
    }

    pub fn group_label(&self) -> String {
        format!("G{:02}", self.group())
    }

    pub fn is_probe(&self) -> bool {
        matches!(self.body, Body::Probe { .. })
    }

    pub fn points(&self, grid: &ParameterGrid) -> Vec<Point> {
        let uses_n = self.arity.contains(&Dim::N);
        enumerate(grid, self.arity, self.double)
            .into_iter()
            .filter(|p| !uses_n || p.n >= self.min_n)
            .filter(|p| self.when.is_none_or(|f| f(p)))
            .collect()
    }
}

impl std::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("double", &self.double)
            .field("probe", &self.is_probe())
            .finish()
    }
}
