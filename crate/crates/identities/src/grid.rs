//! Parameter grids and the points enumerated from them.

use std::fmt;

use polycauchy::{int, q, Rational};
use num_traits::Zero;

use crate::EngineError;

/// One parameter axis an identity ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    N,
    K,
    I,
    R,
    S,
    M,
    A,
    Q,
    L,
    X,
    Y,
}

impl Dim {
    pub fn name(self) -> &'static str {
        match self {
            Dim::N => "n",
            Dim::K => "k",
            Dim::I => "i",
            Dim::R => "r",
            Dim::S => "s",
            Dim::M => "m",
            Dim::A => "a",
            Dim::Q => "q",
            Dim::L => "L",
            Dim::X => "x",
            Dim::Y => "y",
        }
    }
}

/// The seven rational sample points used for pointwise checks.
pub fn sample_points() -> Vec<Rational> {
    vec![int(0), int(1), int(-1), q(1, 2), q(-1, 2), q(2, 3), q(-3, 2)]
}

/// Values for every axis. `i` and `s` are not listed: `i` runs over `0..=n`
/// and `s` over `0..=r`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterGrid {
    /// `n` for identities with a single sum.
    pub n: Vec<usize>,
    /// `n` for identities with nested sums.
    pub n_double: Vec<usize>,
    pub k: Vec<usize>,
    pub r: Vec<usize>,
    /// The `m` of r-Whitney numbers; nonzero.
    pub m: Vec<i64>,
    pub a: Vec<usize>,
    pub q: Vec<Rational>,
    pub l: Vec<Vec<Rational>>,
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
}

impl Default for ParameterGrid {
    fn default() -> Self {
        ParameterGrid {
            n: (0..=12).collect(),
            n_double: (0..=8).collect(),
            k: (1..=4).collect(),
            r: (0..=4).collect(),
            m: vec![1, 2, -1, 3],
            a: (1..=3).collect(),
            q: vec![int(1), int(-1), q(1, 2), int(-3)],
            l: vec![vec![int(1)], vec![q(1, 2), int(3)], vec![int(1), int(-1), q(2, 3)]],
            x: sample_points(),
            y: sample_points(),
        }
    }
}

impl ParameterGrid {
    /// The default grid with `n` capped at `max_n` on both ranges.
    pub fn with_max_n(max_n: usize) -> Self {
        let mut g = ParameterGrid::default();
        g.set_max_n(max_n);
        g
    }

    pub fn set_max_n(&mut self, max_n: usize) {
        let double_cap = self.n_double.iter().max().copied().unwrap_or(0);
        self.n = (0..=max_n).collect();
        self.n_double = (0..=max_n.min(double_cap)).collect();
    }

    /// A grid with no `n` values; every case evaluates zero points on it.
    pub fn empty() -> Self {
        ParameterGrid { n: Vec::new(), n_double: Vec::new(), ..ParameterGrid::default() }
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        let bad = |msg: &str| Err(EngineError::MalformedGrid(msg.to_string()));
        if self.k.contains(&0) {
            return bad("k values must be >= 1");
        }
        if self.a.contains(&0) {
            return bad("a values must be >= 1");
        }
        if self.m.contains(&0) {
            return bad("r-Whitney m values must be nonzero");
        }
        if self.q.iter().any(Zero::is_zero) {
            return bad("q values must be nonzero");
        }
        for l in &self.l {
            if l.is_empty() {
                return bad("L lists must be nonempty");
            }
            if l.iter().any(Zero::is_zero) {
                return bad("L entries must be nonzero");
            }
        }
        Ok(())
    }

    /// One line naming every axis and its values, stable across runs.
    pub fn describe(&self) -> String {
        fn list<T: fmt::Display>(v: &[T]) -> String {
            v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
        }
        let ls: Vec<String> = self.l.iter().map(|l| format!("({})", list(l))).collect();
        format!(
            "n=[{}] n2=[{}] k=[{}] r=[{}] m=[{}] a=[{}] q=[{}] L=[{}] x=[{}] y=[{}]",
            list(&self.n),
            list(&self.n_double),
            list(&self.k),
            list(&self.r),
            list(&self.m),
            list(&self.a),
            list(&self.q),
            ls.join(","),
            list(&self.x),
            list(&self.y)
        )
    }
}

/// A parameter point. Axes a case does not range over keep their defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub n: usize,
    pub k: usize,
    pub i: usize,
    pub r: usize,
    pub s: usize,
    pub m: i64,
    pub a: usize,
    pub q: Rational,
    pub l: Vec<Rational>,
    pub x: Rational,
    pub y: Rational,
}

impl Default for Point {
    fn default() -> Self {
        Point {
            n: 0,
            k: 1,
            i: 0,
            r: 0,
            s: 0,
            m: 1,
            a: 1,
            q: int(1),
            l: vec![int(1)],
            x: int(0),
            y: int(0),
        }
    }
}

impl Point {
    /// Renders only the axes in `arity`, in canonical order.
    pub fn render(&self, arity: &[Dim]) -> String {
        let mut dims = arity.to_vec();
        dims.sort();
        dims.iter()
            .map(|d| {
                let v = match d {
                    Dim::N => self.n.to_string(),
                    Dim::K => self.k.to_string(),
                    Dim::I => self.i.to_string(),
                    Dim::R => self.r.to_string(),
                    Dim::S => self.s.to_string(),
                    Dim::M => self.m.to_string(),
                    Dim::A => self.a.to_string(),
                    Dim::Q => self.q.to_string(),
                    Dim::L => {
                        let parts: Vec<String> = self.l.iter().map(|v| v.to_string()).collect();
                        format!("({})", parts.join(","))
                    }
                    Dim::X => self.x.to_string(),
                    Dim::Y => self.y.to_string(),
                };
                format!("{}={}", d.name(), v)
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Every point of `grid` over `arity`, in a fixed order.
pub(crate) fn enumerate(grid: &ParameterGrid, arity: &[Dim], double: bool) -> Vec<Point> {
    let mut dims = arity.to_vec();
    dims.sort();
    dims.dedup();
    let mut out = Vec::new();
    expand(grid, &dims, double, Point::default(), &mut out);
    out
}

fn expand(grid: &ParameterGrid, dims: &[Dim], double: bool, p: Point, out: &mut Vec<Point>) {
    let Some((&d, rest)) = dims.split_first() else {
        out.push(p);
        return;
    };
    let mut next = |f: &dyn Fn(&mut Point)| {
        let mut p2 = p.clone();
        f(&mut p2);
        expand(grid, rest, double, p2, out);
    };
    match d {
        Dim::N => {
            for &n in if double { &grid.n_double } else { &grid.n } {
                next(&|pt| pt.n = n);
            }
        }
        Dim::K => grid.k.iter().for_each(|&k| next(&|pt| pt.k = k)),
        Dim::I => (0..=p.n).for_each(|i| next(&|pt| pt.i = i)),
        Dim::R => grid.r.iter().for_each(|&r| next(&|pt| pt.r = r)),
        Dim::S => (0..=p.r).for_each(|s| next(&|pt| pt.s = s)),
        Dim::M => grid.m.iter().for_each(|&m| next(&|pt| pt.m = m)),
        Dim::A => grid.a.iter().for_each(|&a| next(&|pt| pt.a = a)),
        Dim::Q => grid.q.iter().for_each(|v| next(&|pt| pt.q = v.clone())),
        Dim::L => grid.l.iter().for_each(|l| {
            next(&|pt| {
                pt.l = l.clone();
                pt.k = l.len();
            })
        }),
        Dim::X => grid.x.iter().for_each(|v| next(&|pt| pt.x = v.clone())),
        Dim::Y => grid.y.iter().for_each(|v| next(&|pt| pt.y = v.clone())),
    }
}
