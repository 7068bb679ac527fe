//! `key = value` files overriding the default verification grid.
//!
//! Keys: `max_n`, `max_n_double` (integers), `k`, `r`, `a`, `m` (comma
//! separated integers), `q`, `x`, `y` (comma separated rationals) and `l`
//! (semicolon separated lists of comma separated rationals). Blank lines and
//! lines starting with `#` are ignored.

use std::str::FromStr;

use polycauchy::{parse_rational, Rational};
use polycauchy_identities::ParameterGrid;

fn list<T: FromStr>(key: &str, v: &str) -> Result<Vec<T>, String> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("{key}: cannot parse {s:?}")))
        .collect()
}

fn rationals(key: &str, v: &str) -> Result<Vec<Rational>, String> {
    v.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_rational(s).map_err(|e| format!("{key}: {e}")))
        .collect()
}

pub fn apply(grid: &mut ParameterGrid, text: &str) -> Result<(), String> {
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        let one = |v: &str| v.parse::<usize>().map_err(|_| format!("{key}: cannot parse {v:?}"));
        match key {
            "max_n" => grid.n = (0..=one(value)?).collect(),
            "max_n_double" => grid.n_double = (0..=one(value)?).collect(),
            "k" => grid.k = list(key, value)?,
            "r" => grid.r = list(key, value)?,
            "a" => grid.a = list(key, value)?,
            "m" => grid.m = list(key, value)?,
            "q" => grid.q = rationals(key, value)?,
            "x" => grid.x = rationals(key, value)?,
            "y" => grid.y = rationals(key, value)?,
            "l" => {
                grid.l = value
                    .split(';')
                    .map(|part| rationals(key, part))
                    .collect::<Result<_, _>>()?
            }
            _ => return Err(format!("line {}: unknown key {key:?}", lineno + 1)),
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycauchy::{int, q};

    #[test]
    fn overrides_selected_axes() {
        let mut g = ParameterGrid::default();
        apply(&mut g, "# small\nmax_n = 3\nq = 1, -1/2\nl = 1; 1/2, 3\n").unwrap();
        assert_eq!(g.n, vec![0, 1, 2, 3]);
        assert_eq!(g.q, vec![int(1), q(-1, 2)]);
        assert_eq!(g.l, vec![vec![int(1)], vec![q(1, 2), int(3)]]);
        assert_eq!(g.k, ParameterGrid::default().k);
    }

    #[test]
    fn rejects_bad_lines() {
        let mut g = ParameterGrid::default();
        assert!(apply(&mut g, "max_n 3").is_err());
        assert!(apply(&mut g, "colour = red").is_err());
        assert!(apply(&mut g, "q = 1/0").is_err());
    }
}
