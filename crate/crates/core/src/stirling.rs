//! Stirling-like triangles and their polynomial generalizations.
//!
//! Integer triangles live in process-wide [`TriangleCache`]s that grow row by
//! row on demand. Generalized Stirling numbers (GSNs) `[n m]_x` and `{n m}_x`
//! are polynomials in the shift `x`; `[n m]_0` and `{n m}_0` are the ordinary
//! Stirling numbers.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::exact::{binom, factorial, int, pow, pow_i, sign, Rational};
use crate::poly::{BiPoly, RatPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// Unsigned Stirling numbers of the first kind `[n m]`.
    Stirling1Unsigned,
    /// Stirling numbers of the second kind `{n m}`.
    Stirling2,
    /// Signed central factorial numbers with even indices, `u(n, m) = t(2n, 2m)`.
    CentralU,
    /// Unsigned Lah numbers `L(n, m)`.
    Lah,
}

impl TriangleKind {
    pub const ALL: [TriangleKind; 4] = [
        TriangleKind::Stirling1Unsigned,
        TriangleKind::Stirling2,
        TriangleKind::CentralU,
        TriangleKind::Lah,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::Stirling1Unsigned => "stirling1",
            TriangleKind::Stirling2 => "stirling2",
            TriangleKind::CentralU => "central-u",
            TriangleKind::Lah => "lah",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Row `n + 1` from row `n`.
    fn next_row(self, n: usize, row: &[Rational]) -> Vec<Rational> {
        let at = |m: usize| row.get(m).cloned().unwrap_or_else(Rational::zero);
        let below = |m: usize| if m == 0 { Rational::zero() } else { at(m - 1) };
        let nn = int(n as i64);
        (0..=n + 1)
            .map(|m| match self {
                TriangleKind::Stirling1Unsigned => below(m) + &nn * at(m),
                TriangleKind::Stirling2 => below(m) + int(m as i64) * at(m),
                TriangleKind::CentralU => below(m) - &nn * &nn * at(m),
                TriangleKind::Lah => below(m) + int((n + m) as i64) * at(m),
            })
            .collect()
    }
}

/// Memoized integer triangle, safe for concurrent readers.
///
/// Rows are appended under a write lock and never modified afterwards, so a
/// value once observed is stable for the lifetime of the process.
#[derive(Debug)]
pub struct TriangleCache {
    kind: TriangleKind,
    rows: RwLock<Vec<Vec<Rational>>>,
}

static STIRLING1: TriangleCache = TriangleCache::new(TriangleKind::Stirling1Unsigned);
static STIRLING2: TriangleCache = TriangleCache::new(TriangleKind::Stirling2);
static CENTRAL_U: TriangleCache = TriangleCache::new(TriangleKind::CentralU);
static LAH: TriangleCache = TriangleCache::new(TriangleKind::Lah);

pub fn triangle(kind: TriangleKind) -> &'static TriangleCache {
    match kind {
        TriangleKind::Stirling1Unsigned => &STIRLING1,
        TriangleKind::Stirling2 => &STIRLING2,
        TriangleKind::CentralU => &CENTRAL_U,
        TriangleKind::Lah => &LAH,
    }
}

impl TriangleCache {
    pub const fn new(kind: TriangleKind) -> Self {
        TriangleCache {
            kind,
            rows: RwLock::new(Vec::new()),
        }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Entry `(n, m)`; zero outside `0 <= m <= n`.
    pub fn get(&self, n: usize, m: usize) -> Rational {
        if m > n {
            return Rational::zero();
        }
        self.ensure(n);
        self.rows.read().expect("triangle lock poisoned")[n][m].clone()
    }

    pub fn row(&self, n: usize) -> Vec<Rational> {
        self.ensure(n);
        self.rows.read().expect("triangle lock poisoned")[n].clone()
    }

    /// Number of rows currently memoized.
    pub fn len(&self) -> usize {
        self.rows.read().expect("triangle lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn snapshot(&self) -> Vec<Vec<Rational>> {
        self.rows.read().expect("triangle lock poisoned").clone()
    }

    /// Seeds the cache with previously computed rows.
    ///
    /// Rows must be shaped like a triangle (row `n` has `n + 1` entries) and
    /// start at row 0; rows already present are kept.
    pub fn preload(&self, rows: Vec<Vec<Rational>>) -> Result<()> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(domain(format!("{} row {n} has {} entries", self.kind.name(), row.len())));
            }
        }
        let mut guard = self.rows.write().expect("triangle lock poisoned");
        if rows.len() > guard.len() {
            *guard = rows;
        }
        Ok(())
    }

    fn ensure(&self, n: usize) {
        if self.rows.read().expect("triangle lock poisoned").len() > n {
            return;
        }
        let mut rows = self.rows.write().expect("triangle lock poisoned");
        if rows.is_empty() {
            rows.push(vec![Rational::one()]);
        }
        while rows.len() <= n {
            let k = rows.len() - 1;
            let next = self.kind.next_row(k, &rows[k]);
            rows.push(next);
        }
    }
}

/// Unsigned Stirling number of the first kind; zero outside the triangle.
pub fn stirling1(n: usize, m: usize) -> Rational {
    STIRLING1.get(n, m)
}

/// Stirling number of the second kind; zero outside the triangle.
pub fn stirling2(n: usize, m: usize) -> Rational {
    STIRLING2.get(n, m)
}

pub fn lah(n: usize, m: usize) -> Rational {
    LAH.get(n, m)
}

/// Signed central factorial number `u(n, m)`.
pub fn central_u(n: usize, m: usize) -> Result<Rational> {
    check_index(n, m)?;
    Ok(CENTRAL_U.get(n, m))
}

fn check_index(n: usize, m: usize) -> Result<()> {
    if m > n {
        return Err(domain(format!("need 0 <= m <= n, got n={n}, m={m}")));
    }
    Ok(())
}

type PolyMemo = RwLock<Option<HashMap<(usize, usize), RatPoly>>>;

static GSN1: PolyMemo = RwLock::new(None);
static GSN2: PolyMemo = RwLock::new(None);

fn memo(table: &PolyMemo, key: (usize, usize), build: impl FnOnce() -> RatPoly) -> RatPoly {
    if let Some(p) = table
        .read()
        .expect("memo lock poisoned")
        .as_ref()
        .and_then(|m| m.get(&key))
    {
        return p.clone();
    }
    let p = build();
    table
        .write()
        .expect("memo lock poisoned")
        .get_or_insert_with(HashMap::new)
        .insert(key, p.clone());
    p
}

/// `[n m]_x = sum_i C(i+m, m) [n, i+m] x^i`; the zero polynomial when `m > n`.
pub fn gsn1_poly(n: usize, m: usize) -> RatPoly {
    if m > n {
        return RatPoly::zero();
    }
    memo(&GSN1, (n, m), || {
        RatPoly::new(
            (0..=n - m)
                .map(|i| binom(i + m, m) * stirling1(n, i + m))
                .collect(),
        )
    })
}

/// `{n m}_x = sum_i C(n, i) {n-i, m} x^i`; the zero polynomial when `m > n`.
pub fn gsn2_poly(n: usize, m: usize) -> RatPoly {
    if m > n {
        return RatPoly::zero();
    }
    memo(&GSN2, (n, m), || {
        RatPoly::new((0..=n - m).map(|i| binom(n, i) * stirling2(n - i, m)).collect())
    })
}

pub fn gsn1(n: usize, m: usize) -> Result<RatPoly> {
    check_index(n, m)?;
    Ok(gsn1_poly(n, m))
}

pub fn gsn2(n: usize, m: usize) -> Result<RatPoly> {
    check_index(n, m)?;
    Ok(gsn2_poly(n, m))
}

/// `[n m]_{x0}`; pass `-x0` or `1 - x0` for the reflected variants.
pub fn gsn1_at(n: usize, m: usize, x0: &Rational) -> Result<Rational> {
    Ok(gsn1(n, m)?.eval(x0))
}

pub fn gsn2_at(n: usize, m: usize, x0: &Rational) -> Result<Rational> {
    Ok(gsn2(n, m)?.eval(x0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    First,
    Second,
}

/// The bivariate Stirling pair as a polynomial in `y` (outer) over `q` (inner).
///
/// First kind: `[n m]_(y,q) = sum_i C(i+m, m) [n, i+m] y^i q^(n-m-i)`.
///
/// Second kind: returns the numerator `q^m {n m}_(y,q) =
/// (1/m!) sum_l (-1)^(m-l) C(m, l) (y + l q)^n`, which stays polynomial; the
/// caller divides by `q^m` (see [`stirling_pair_at`]).
pub fn gsn_bivariate(kind: StirlingKind, n: usize, m: usize) -> Result<BiPoly> {
    check_index(n, m)?;
    let out = match kind {
        StirlingKind::First => BiPoly::new(
            (0..=n - m)
                .map(|i| {
                    RatPoly::monomial(binom(i + m, m) * stirling1(n, i + m), n - m - i)
                })
                .collect(),
        ),
        StirlingKind::Second => {
            let mut acc = BiPoly::zero();
            for l in 0..=m {
                let base = BiPoly::new(vec![RatPoly::from_ints(&[0, l as i64]), RatPoly::one()]);
                let term = base.pow(n).scale(&(sign(m - l) * binom(m, l)));
                acc += term;
            }
            acc.scale(&factorial(m).recip())
        }
    };
    Ok(out)
}

/// Numeric value of the Stirling pair at `(y, q)`; the second kind needs `q != 0`.
pub fn stirling_pair_at(kind: StirlingKind, n: usize, m: usize, y: &Rational, q: &Rational) -> Result<Rational> {
    check_index(n, m)?;
    match kind {
        StirlingKind::First => Ok((0..=n - m)
            .map(|i| binom(i + m, m) * stirling1(n, i + m) * pow(q, n - m - i) * pow(y, i))
            .sum()),
        StirlingKind::Second => {
            if q.is_zero() {
                return Err(domain("second-kind Stirling pair needs q != 0"));
            }
            let s: Rational = (0..=m)
                .map(|l| sign(m - l) * binom(m, l) * pow(&(y + q * int(l as i64)), n))
                .sum();
            Ok(s / (factorial(m) * pow(q, m)))
        }
    }
}

/// The Stirling pair with `q` fixed, as a polynomial in `y`.
pub fn stirling_pair_in_y(kind: StirlingKind, n: usize, m: usize, q: &Rational) -> Result<RatPoly> {
    let p = gsn_bivariate(kind, n, m)?.map(|c| c.eval(q));
    match kind {
        StirlingKind::First => Ok(p),
        StirlingKind::Second => {
            if q.is_zero() {
                return Err(domain("second-kind Stirling pair needs q != 0"));
            }
            Ok(p.scale(&pow(q, m).recip()))
        }
    }
}

/// r-Whitney numbers `w_{m,r}(n,l)` (first kind) and `W_{m,r}(n,l)` (second kind),
/// via `m^(n-l)` times the GSN at `r/m`.
pub fn whitney(kind: StirlingKind, m: i64, r: i64, n: usize, l: usize) -> Result<Rational> {
    if m == 0 {
        return Err(domain("r-Whitney numbers need m != 0"));
    }
    check_index(n, l)?;
    let x0 = Rational::new(r.into(), m.into());
    let g = match kind {
        StirlingKind::First => gsn1_at(n, l, &x0)?,
        StirlingKind::Second => gsn2_at(n, l, &x0)?,
    };
    Ok(pow_i(&int(m), (n - l) as i64) * g)
}

/// r-Whitney numbers from their double-Stirling sums; an independent route
/// to [`whitney`].
pub fn whitney_by_stirling(kind: StirlingKind, m: i64, r: i64, n: usize, l: usize) -> Result<Rational> {
    if m == 0 {
        return Err(domain("r-Whitney numbers need m != 0"));
    }
    check_index(n, l)?;
    let (mm, rr) = (int(m), int(r));
    let v = match kind {
        StirlingKind::First => (l..=n)
            .map(|j| binom(j, l) * pow(&mm, n - j) * pow(&rr, j - l) * stirling1(n, j))
            .sum(),
        StirlingKind::Second => (l..=n)
            .map(|j| binom(n, j) * pow(&mm, j - l) * pow(&rr, n - j) * stirling2(j, l))
            .sum(),
    };
    Ok(v)
}

/// `A_x(n, m) = (n!/m!) C(x+n-1, n-m)`.
pub fn a_number(n: usize, m: usize) -> Result<RatPoly> {
    check_index(n, m)?;
    Ok(a_number_poly(n, m))
}

pub(crate) fn a_number_poly(n: usize, m: usize) -> RatPoly {
    if m > n {
        return RatPoly::zero();
    }
    RatPoly::binom_poly(&int(n as i64 - 1), 1, n - m).scale(&(factorial(n) / factorial(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn ordinary_triangles() {
        let s1: Vec<_> = (0..=4).map(|m| stirling1(4, m)).collect();
        assert_eq!(s1, [0, 6, 11, 6, 1].map(int));
        let s2: Vec<_> = (0..=4).map(|m| stirling2(4, m)).collect();
        assert_eq!(s2, [0, 1, 7, 6, 1].map(int));
        assert_eq!(stirling1(0, 0), int(1));
        assert_eq!(stirling1(3, 5), int(0));
    }

    #[test]
    fn lah_closed_form() {
        for n in 1..10usize {
            for m in 1..=n {
                let closed = factorial(n) / factorial(m) * binom(n - 1, m - 1);
                assert_eq!(lah(n, m), closed, "L({n},{m})");
            }
            assert_eq!(lah(n, 0), int(0));
        }
        assert_eq!(lah(0, 0), int(1));
    }

    #[test]
    fn central_factorial_examples() {
        assert_eq!(central_u(1, 1).unwrap(), int(1));
        assert_eq!(central_u(2, 1).unwrap(), int(-1));
        assert_eq!(central_u(2, 2).unwrap(), int(1));
        assert_eq!(central_u(3, 2).unwrap(), int(-5));
        assert_eq!(central_u(4, 0).unwrap(), int(0));
        assert!(central_u(1, 2).is_err());
    }

    #[test]
    fn gsn_examples() {
        assert_eq!(gsn1(2, 1).unwrap(), RatPoly::from_ints(&[1, 2]));
        assert_eq!(gsn2(3, 2).unwrap(), RatPoly::from_ints(&[3, 3]));
        assert!(gsn1(2, 3).is_err());
        for n in 0..8 {
            for m in 0..=n {
                assert_eq!(gsn1_at(n, m, &int(0)).unwrap(), stirling1(n, m));
                assert_eq!(gsn2_at(n, m, &int(0)).unwrap(), stirling2(n, m));
            }
        }
        assert_eq!(gsn1_at(2, 1, &int(-1)).unwrap(), int(-1));
        assert_eq!(gsn1_at(2, 1, &int(1)).unwrap(), int(3));
        assert_eq!(gsn1_at(2, 1, &int(1)).unwrap(), stirling1(3, 2));
    }

    #[test]
    fn bivariate_examples() {
        let b = gsn_bivariate(StirlingKind::First, 2, 1).unwrap();
        // q + 2y: outer y, inner q
        assert_eq!(b, BiPoly::new(vec![RatPoly::from_ints(&[0, 1]), RatPoly::from_ints(&[2])]));
        for n in 0..7 {
            for m in 0..=n {
                let v = stirling_pair_at(StirlingKind::First, n, m, &int(0), &int(1)).unwrap();
                assert_eq!(v, stirling1(n, m));
            }
        }
        let s = stirling_pair_at(StirlingKind::Second, 1, 1, &q(3, 7), &q(-2, 5)).unwrap();
        assert_eq!(s, int(1));
        assert!(stirling_pair_at(StirlingKind::Second, 2, 1, &int(1), &int(0)).is_err());
    }

    #[test]
    fn pair_values_match_bivariate() {
        let pts = [(int(0), int(1)), (q(1, 2), int(-1)), (q(-3, 2), q(2, 3))];
        for kind in [StirlingKind::First, StirlingKind::Second] {
            for n in 0..7 {
                for m in 0..=n {
                    let b = gsn_bivariate(kind, n, m).unwrap();
                    for (y, qq) in &pts {
                        let mut v = b.map(|c| c.eval(qq)).eval(y);
                        if kind == StirlingKind::Second {
                            v /= pow(qq, m);
                        }
                        assert_eq!(stirling_pair_at(kind, n, m, y, qq).unwrap(), v, "{kind:?} {n} {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn whitney_examples() {
        for n in 0..7 {
            for l in 0..=n {
                assert_eq!(whitney(StirlingKind::First, 1, 0, n, l).unwrap(), stirling1(n, l));
            }
        }
        assert_eq!(whitney(StirlingKind::First, 2, 1, 2, 1).unwrap(), int(4));
        assert_eq!(whitney(StirlingKind::Second, 2, 1, 2, 1).unwrap(), int(4));
        assert!(whitney(StirlingKind::First, 0, 1, 2, 1).is_err());
    }

    #[test]
    fn whitney_routes_agree() {
        for kind in [StirlingKind::First, StirlingKind::Second] {
            for (m, r) in [(1, 0), (2, 1), (-1, 3), (3, -2), (-2, -1)] {
                for n in 0..8 {
                    for l in 0..=n {
                        assert_eq!(
                            whitney(kind, m, r, n, l).unwrap(),
                            whitney_by_stirling(kind, m, r, n, l).unwrap(),
                            "{kind:?} m={m} r={r} n={n} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn a_number_examples() {
        assert_eq!(a_number(3, 3).unwrap(), RatPoly::one());
        assert_eq!(a_number(2, 0).unwrap(), RatPoly::from_ints(&[0, 1, 1]));
        assert_eq!(a_number(2, 1).unwrap(), RatPoly::from_ints(&[2, 2]));
        assert!(a_number(1, 2).is_err());
    }

    #[test]
    fn preload_validates_shape() {
        let cache = TriangleCache::new(TriangleKind::Stirling2);
        assert!(cache.preload(vec![vec![int(1)], vec![int(0)]]).is_err());
        cache.preload(STIRLING2.snapshot()).unwrap();
    }
}
