//! Persistence of the integer triangle caches between runs.
//!
//! Each triangle is stored as `<dir>/<name>.tsv`. The first line is the
//! header `polycauchy-triangle<TAB>v1<TAB><name>`; every following line is one
//! row, entries separated by tabs and written as `p/q` (or `p`). Files with an
//! unknown header or a malformed row are rejected; a missing file is skipped.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};
use crate::stirling::{triangle, TriangleKind};

pub const CACHE_ENV: &str = "POLYCAUCHY_CACHE_DIR";
const MAGIC: &str = "polycauchy-triangle";
const VERSION: &str = "v1";

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

pub fn cache_file(dir: &Path, kind: TriangleKind) -> PathBuf {
    dir.join(format!("{}.tsv", kind.name()))
}

/// Writes every triangle's memoized rows into `dir`, creating it if needed.
pub fn save_triangles(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    for kind in TriangleKind::ALL {
        let path = cache_file(dir, kind);
        let rows = triangle(kind).snapshot();
        let mut out = format!("{MAGIC}\t{VERSION}\t{}\n", kind.name());
        for row in rows {
            let cells: Vec<String> = row.iter().map(Rational::to_string).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        let mut f = fs::File::create(&path).map_err(|e| io_err(&path, e))?;
        f.write_all(out.as_bytes()).map_err(|e| io_err(&path, e))?;
    }
    Ok(())
}

/// Parses one cache file's contents into rows.
pub fn parse_triangle(kind: TriangleKind, text: &str) -> Result<Vec<Vec<Rational>>> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    let expected = format!("{MAGIC}\t{VERSION}\t{}", kind.name());
    if header != expected {
        return Err(Error::Parse(format!("bad cache header {header:?}")));
    }
    lines
        .map(|line| line.split('\t').map(parse_rational).collect::<Result<Vec<_>>>())
        .collect()
}

/// Seeds the triangle caches from `dir`; returns the number of files loaded.
pub fn load_triangles(dir: &Path) -> Result<usize> {
    let mut loaded = 0;
    for kind in TriangleKind::ALL {
        let path = cache_file(dir, kind);
        if !path.exists() {
            continue;
        }
        let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
        let rows = parse_triangle(kind, &text)?;
        triangle(kind).preload(rows)?;
        loaded += 1;
    }
    Ok(loaded)
}

/// The cache directory named by `POLYCAUCHY_CACHE_DIR`, if set and nonempty.
pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn header_is_checked() {
        assert!(parse_triangle(TriangleKind::Lah, "junk\n1\n").is_err());
        let ok = format!("{MAGIC}\t{VERSION}\tlah\n1\n0\t1\n");
        assert_eq!(
            parse_triangle(TriangleKind::Lah, &ok).unwrap(),
            vec![vec![int(1)], vec![int(0), int(1)]]
        );
        let bad_cell = format!("{MAGIC}\t{VERSION}\tlah\n1\n0\tx\n");
        assert!(parse_triangle(TriangleKind::Lah, &bad_cell).is_err());
    }
}
