//! Cauchy and poly-Cauchy polynomials of both kinds.
//!
//! `c_n^(k)(x)` and `ĉ_n^(k)(x)` are built from generalized Stirling numbers
//! (the canonical route). The integral, series, binomial-convolution and
//! Bernoulli-number routes are kept as independent oracles selectable through
//! [`Construction`].
//!
//! The iterated integral over the unit cube is evaluated exactly by the
//! monomial map `t^i -> 1/(i+1)^k`; over the box `[0,l_1] x ... x [0,l_k]` the
//! map becomes `t^i -> (l_1...l_k)^(i+1)/(i+1)^k`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::bernoulli::bernoulli_number;
use crate::error::{domain, Result};
use crate::exact::{binom, factorial, int, pow, sign, Rational};
use crate::poly::{BiPoly, RatPoly};
use crate::series::{gf_cauchy1, gf_cauchy2};
use crate::stirling::{gsn1_poly, stirling1, stirling_pair_at, stirling_pair_in_y, StirlingKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CauchyKind {
    First,
    Second,
}

impl CauchyKind {
    pub fn name(self) -> &'static str {
        match self {
            CauchyKind::First => "first",
            CauchyKind::Second => "second",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "first" => Some(CauchyKind::First),
            "second" => Some(CauchyKind::Second),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Signed sums of first-kind GSNs weighted by `1/(m+1)^k`.
    Gsn,
    /// Expansion of `n! C(±(t - x), n)` in `t`, then `t^i -> 1/(i+1)^k`.
    Integral,
    /// Exponential generating function coefficients; `k = 1` only.
    Series,
    /// Binomial convolutions seeded by the poly-Cauchy numbers of the other kind.
    BinomialConv,
    /// Closed form through Bernoulli numbers; `k = 1` only.
    Bernoulli,
}

impl Construction {
    pub const ALL: [Construction; 5] = [
        Construction::Gsn,
        Construction::Integral,
        Construction::Series,
        Construction::BinomialConv,
        Construction::Bernoulli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::Gsn => "gsn",
            Construction::Integral => "integral",
            Construction::Series => "series",
            Construction::BinomialConv => "binomial-conv",
            Construction::Bernoulli => "bernoulli",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }

    /// Whether the construction is defined for poly-order `k`.
    pub fn supports(self, k: usize) -> bool {
        match self {
            Construction::Series | Construction::Bernoulli => k == 1,
            _ => k >= 1,
        }
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(domain("poly-Cauchy order k must be >= 1"));
    }
    Ok(())
}

/// `1/(m+1)^k`.
fn weight(m: usize, k: usize) -> Rational {
    pow(&int(m as i64 + 1), k).recip()
}

/// `c_n^(k)(x)` or `ĉ_n^(k)(x)` via the chosen construction.
pub fn cauchy_poly(kind: CauchyKind, n: usize, k: usize, construction: Construction) -> Result<RatPoly> {
    check_k(k)?;
    if !construction.supports(k) {
        return Err(domain(format!(
            "construction {} is only defined for k = 1",
            construction.name()
        )));
    }
    Ok(match construction {
        Construction::Gsn => cauchy(kind, n, k),
        Construction::Integral => by_integral(kind, n, k),
        Construction::Series => by_series(kind, n),
        Construction::BinomialConv => by_binomial_conv(kind, n, k),
        Construction::Bernoulli => by_bernoulli(kind, n),
    })
}

type CauchyMemo = RwLock<Option<HashMap<(CauchyKind, usize, usize), RatPoly>>>;

static CANONICAL: CauchyMemo = RwLock::new(None);

/// Canonical (GSN) poly-Cauchy polynomial, memoized.
///
/// # Panics
/// Panics when `k == 0`; use [`cauchy_poly`] for checked access.
pub fn cauchy(kind: CauchyKind, n: usize, k: usize) -> RatPoly {
    assert!(k >= 1, "poly-Cauchy order k must be >= 1");
    let key = (kind, n, k);
    if let Some(p) = CANONICAL
        .read()
        .expect("cauchy memo poisoned")
        .as_ref()
        .and_then(|m| m.get(&key))
    {
        return p.clone();
    }
    let p = by_gsn(kind, n, k);
    CANONICAL
        .write()
        .expect("cauchy memo poisoned")
        .get_or_insert_with(HashMap::new)
        .insert(key, p.clone());
    p
}

/// Poly-Cauchy number, the constant term of [`cauchy`].
///
/// # Panics
/// Panics when `k == 0`.
pub fn number(kind: CauchyKind, n: usize, k: usize) -> Rational {
    cauchy(kind, n, k).coeff(0)
}

pub fn cauchy_number(kind: CauchyKind, n: usize, k: usize) -> Result<Rational> {
    check_k(k)?;
    Ok(number(kind, n, k))
}

fn by_gsn(kind: CauchyKind, n: usize, k: usize) -> RatPoly {
    let sum = |signed: bool| -> RatPoly {
        (0..=n)
            .map(|m| {
                let s = if signed { sign(n - m) } else { Rational::one() };
                gsn1_poly(n, m).scale(&(s * weight(m, k)))
            })
            .sum()
    };
    match kind {
        CauchyKind::First => sum(true),
        // ĉ_n(-x) = (-1)^n sum [n m]_x/(m+1)^k
        CauchyKind::Second => sum(false).reflect().scale(&sign(n)),
    }
}

fn by_integral(kind: CauchyKind, n: usize, k: usize) -> RatPoly {
    // factor t - x - j (first kind) or x - t - j (second kind), t outer
    let factor = |j: usize| -> BiPoly {
        let jj = int(j as i64);
        match kind {
            CauchyKind::First => BiPoly::new(vec![RatPoly::new(vec![-jj, int(-1)]), RatPoly::one()]),
            CauchyKind::Second => BiPoly::new(vec![RatPoly::new(vec![-jj, int(1)]), -RatPoly::one()]),
        }
    };
    let prod = (0..n).fold(BiPoly::one(), |acc, j| acc * factor(j));
    prod.functional(|i| weight(i, k))
}

fn by_series(kind: CauchyKind, n: usize) -> RatPoly {
    let gf = match kind {
        CauchyKind::First => gf_cauchy1(n),
        CauchyKind::Second => gf_cauchy2(n),
    };
    gf.coeff(n).scale(&factorial(n))
}

/// Poly-Cauchy numbers straight from the ordinary Stirling triangle.
fn number_by_stirling(kind: CauchyKind, n: usize, k: usize) -> Rational {
    let s: Rational = (0..=n)
        .map(|m| {
            let sg = match kind {
                CauchyKind::First => sign(n - m),
                CauchyKind::Second => Rational::one(),
            };
            sg * weight(m, k) * stirling1(n, m)
        })
        .sum();
    match kind {
        CauchyKind::First => s,
        CauchyKind::Second => sign(n) * s,
    }
}

fn by_binomial_conv(kind: CauchyKind, n: usize, k: usize) -> RatPoly {
    let nf = factorial(n);
    match kind {
        // c_n(x) = (-1)^n n! sum ĉ_m/m! C(x+n-1, n-m)
        CauchyKind::First => {
            let shift = int(n as i64 - 1);
            let s: RatPoly = (0..=n)
                .map(|m| {
                    let c = number_by_stirling(CauchyKind::Second, m, k) / factorial(m);
                    RatPoly::binom_poly(&shift, 1, n - m).scale(&c)
                })
                .sum();
            s.scale(&(sign(n) * nf))
        }
        // ĉ_n(x) = n! sum (-1)^m c_m/m! C(x-m, n-m)
        CauchyKind::Second => {
            let s: RatPoly = (0..=n)
                .map(|m| {
                    let c = sign(m) * number_by_stirling(CauchyKind::First, m, k) / factorial(m);
                    RatPoly::binom_poly(&int(-(m as i64)), 1, n - m).scale(&c)
                })
                .sum();
            s.scale(&nf)
        }
    }
}

/// `c_n = delta_{n,1} + (-1)^(n+1) n sum [n-1, m-1] B_m/m` for `n >= 1`.
fn cauchy_number_by_bernoulli(n: usize) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let s: Rational = (1..=n)
        .map(|m| stirling1(n - 1, m - 1) * bernoulli_number(m) / int(m as i64))
        .sum();
    let delta = if n == 1 { Rational::one() } else { Rational::zero() };
    delta + sign(n + 1) * int(n as i64) * s
}

fn by_bernoulli(kind: CauchyKind, n: usize) -> RatPoly {
    if n == 0 {
        return RatPoly::one();
    }
    let cn = RatPoly::constant(cauchy_number_by_bernoulli(n));
    let base = match kind {
        CauchyKind::First => RatPoly::x(),
        CauchyKind::Second => RatPoly::from_ints(&[-1, 1]),
    };
    let s: RatPoly = (1..=n)
        .map(|m| {
            let sg = match kind {
                CauchyKind::First => Rational::one(),
                CauchyKind::Second => sign(m),
            };
            base.pow(m).scale(&(sg * stirling1(n - 1, m - 1) / int(m as i64)))
        })
        .sum();
    cn + s.scale(&(sign(n) * int(n as i64)))
}

/// Coefficient of `x^i` in `c_n^(k)(x)` (resp. `ĉ_n^(k)(x)`) by its closed form.
pub fn cauchy_coefficient(kind: CauchyKind, n: usize, i: usize, k: usize) -> Result<Rational> {
    check_k(k)?;
    if i > n {
        return Err(domain(format!("coefficient index {i} exceeds degree {n}")));
    }
    let s: Rational = (i..=n)
        .map(|m| {
            let sg = match kind {
                CauchyKind::First => sign(m),
                CauchyKind::Second => Rational::one(),
            };
            sg * weight(m - i, k) * binom(m, i) * stirling1(n, m)
        })
        .sum();
    Ok(sign(n + i) * s)
}

/// The `i`-th derivative through Cauchy numbers and GSNs.
pub fn cauchy_derivative(kind: CauchyKind, n: usize, k: usize, i: usize) -> Result<RatPoly> {
    check_k(k)?;
    if i > n {
        return Ok(RatPoly::zero());
    }
    let s: RatPoly = (i..=n)
        .map(|m| {
            let w = sign(m) * number(kind, n - m, k) * binom(n, m);
            let g = gsn1_poly(m, i);
            let g = match kind {
                CauchyKind::First => g,
                CauchyKind::Second => g.reflect(),
            };
            g.scale(&w)
        })
        .sum();
    let lead = match kind {
        CauchyKind::First => factorial(i),
        CauchyKind::Second => sign(i) * factorial(i),
    };
    Ok(s.scale(&lead))
}

/// Sign of the `(x - n)` term in the one-step recurrence for `ĉ_{n+1}^(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceSign {
    Plus,
    Minus,
}

impl RecurrenceSign {
    pub fn name(self) -> &'static str {
        match self {
            RecurrenceSign::Plus => "+(x-n)",
            RecurrenceSign::Minus => "-(x-n)",
        }
    }
}

/// `c_{n+1}^(k)(x)` (resp. `ĉ_{n+1}^(k)(x)`) from index `n` by the one-step
/// recurrence. The second kind uses `+(x - n)`, the variant confirmed by the
/// identity suite.
pub fn cauchy_recurrence_step(kind: CauchyKind, n: usize, k: usize) -> Result<RatPoly> {
    recurrence_step_with_sign(kind, n, k, RecurrenceSign::Plus)
}

/// The one-step recurrence with an explicit sign on the `(x - n)` term of the
/// second-kind variant; the sign is ignored for the first kind.
pub fn recurrence_step_with_sign(
    kind: CauchyKind,
    n: usize,
    k: usize,
    variant: RecurrenceSign,
) -> Result<RatPoly> {
    check_k(k)?;
    let nn = int(n as i64);
    let nf = factorial(n);
    match kind {
        CauchyKind::First => {
            // -(n+x) c_n + (-1)^(n+1) n! sum ĉ_{m+1}/m! C(x+n, n-m)
            let lin = RatPoly::new(vec![-nn.clone(), int(-1)]);
            let s: RatPoly = (0..=n)
                .map(|m| {
                    let c = number(CauchyKind::Second, m + 1, k) / factorial(m);
                    RatPoly::binom_poly(&nn, 1, n - m).scale(&c)
                })
                .sum();
            Ok(lin * cauchy(kind, n, k) + s.scale(&(sign(n + 1) * nf)))
        }
        CauchyKind::Second => {
            // ±(x-n) ĉ_n - n! sum (-1)^m c_{m+1}/m! C(x-m-1, n-m)
            let lin = RatPoly::new(vec![-nn.clone(), int(1)]);
            let lin = match variant {
                RecurrenceSign::Plus => lin,
                RecurrenceSign::Minus => -lin,
            };
            let s: RatPoly = (0..=n)
                .map(|m| {
                    let c = sign(m) * number(CauchyKind::First, m + 1, k) / factorial(m);
                    RatPoly::binom_poly(&int(-(m as i64) - 1), 1, n - m).scale(&c)
                })
                .sum();
            Ok(lin * cauchy(kind, n, k) - s.scale(&nf))
        }
    }
}

/// `sum_i (-1)^i P^(i+1)/(i+1)^k C(j, i) x^(j-i)` with `P = l_1 ... l_k`.
fn aux(j: usize, k: usize, prod: &Rational) -> RatPoly {
    let mut coeffs = vec![Rational::zero(); j + 1];
    let mut p = prod.clone();
    for i in 0..=j {
        coeffs[j - i] = sign(i) * binom(j, i) * &p * weight(i, k);
        p *= prod;
    }
    RatPoly::new(coeffs)
}

/// `CC_j^(k)(x)`: `1` for `j = 0`, else `sum_i (-1)^i/(i+1)^k C(j,i) x^(j-i)`.
pub fn c_aux_poly(j: usize, k: usize) -> RatPoly {
    aux(j, k, &Rational::one())
}

/// `CC_j^(k)(x; L)` with `k = L.len()`; the constant `l_1 ... l_k` at `j = 0`.
pub fn c_aux_poly_l(j: usize, l: &[Rational]) -> RatPoly {
    aux(j, l.len(), &l_product(l))
}

fn l_product(l: &[Rational]) -> Rational {
    l.iter().fold(Rational::one(), |acc, v| acc * v)
}

/// Parameters of the multiparameter poly-Cauchy polynomials
/// `c^(k)_{n,a,q,L,y}(x)` and `ĉ^(k)_{n,a,q,L,y}(x)`; `k` is the length of `L`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiParam {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub q: Rational,
    pub l: Vec<Rational>,
    pub y: Rational,
}

impl MultiParam {
    pub fn new(n: usize, a: usize, q: Rational, l: Vec<Rational>, y: Rational) -> Result<Self> {
        let p = MultiParam {
            n,
            k: l.len(),
            a,
            q,
            l,
            y,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 1 || self.k != self.l.len() {
            return Err(domain("L must hold exactly k >= 1 entries"));
        }
        if self.a < 1 {
            return Err(domain("shift a must be >= 1"));
        }
        if self.l.iter().any(Zero::is_zero) {
            return Err(domain("entries of L must be nonzero"));
        }
        Ok(())
    }

    pub fn l_product(&self) -> Rational {
        l_product(&self.l)
    }

    pub fn with_y(&self, y: Rational) -> Self {
        MultiParam { y, ..self.clone() }
    }
}

/// Multiparameter poly-Cauchy polynomial in `x` through the bivariate
/// Stirling pair and the augmented polynomials `CC_j^(k)(x; L)`.
pub fn multiparam_cauchy(kind: CauchyKind, p: &MultiParam) -> Result<RatPoly> {
    p.validate()?;
    let mut acc = RatPoly::zero();
    for m in 0..=p.n {
        let y = match kind {
            CauchyKind::First => p.y.clone(),
            CauchyKind::Second => -p.y.clone(),
        };
        let s = stirling_pair_at(StirlingKind::First, p.n, m, &y, &p.q)?;
        let sg = match kind {
            CauchyKind::First => sign(p.n),
            CauchyKind::Second => sign(p.n - m),
        };
        acc += c_aux_poly_l(m + p.a - 1, &p.l).scale(&(sg * s));
    }
    Ok(acc.scale(&sign(p.a - 1)))
}

/// The same polynomial as [`multiparam_cauchy`] from its defining integral:
/// the integrand is expanded in `t = t_1...t_k` and each `t^i` is replaced by
/// its integral over the box spanned by `L`.
pub fn multiparam_cauchy_integral(kind: CauchyKind, p: &MultiParam) -> Result<RatPoly> {
    p.validate()?;
    let one = RatPoly::one();
    let (base, shifted): (BiPoly, Box<dyn Fn(usize) -> BiPoly>) = match kind {
        CauchyKind::First => (
            BiPoly::new(vec![RatPoly::from_ints(&[0, -1]), one.clone()]),
            Box::new(|j| {
                let c = -(&p.y + int(j as i64) * &p.q);
                BiPoly::new(vec![RatPoly::new(vec![c, int(-1)]), RatPoly::one()])
            }),
        ),
        CauchyKind::Second => (
            BiPoly::new(vec![RatPoly::from_ints(&[0, 1]), -one.clone()]),
            Box::new(|j| {
                let c = &p.y - int(j as i64) * &p.q;
                BiPoly::new(vec![RatPoly::new(vec![c, int(1)]), -RatPoly::one()])
            }),
        ),
    };
    let mut prod = base.pow(p.a - 1);
    for j in 0..p.n {
        prod = prod * shifted(j);
    }
    let lp = p.l_product();
    let v = prod.functional(|i| pow(&lp, i + 1) * weight(i, p.k));
    Ok(match kind {
        CauchyKind::First => v,
        CauchyKind::Second => v.scale(&sign(p.a - 1)),
    })
}

/// The multiparameter polynomial at fixed `x = x0`, as a polynomial in `y`
/// (the value of `p.y` is ignored).
pub fn multiparam_cauchy_in_y(kind: CauchyKind, p: &MultiParam, x0: &Rational) -> Result<RatPoly> {
    p.validate()?;
    let mut acc = RatPoly::zero();
    for m in 0..=p.n {
        let s = stirling_pair_in_y(StirlingKind::First, p.n, m, &p.q)?;
        let (s, sg) = match kind {
            CauchyKind::First => (s, sign(p.n)),
            CauchyKind::Second => (s.reflect(), sign(p.n - m)),
        };
        let c = c_aux_poly_l(m + p.a - 1, &p.l).eval(x0);
        acc += s.scale(&(sg * c));
    }
    Ok(acc.scale(&sign(p.a - 1)))
}

/// Shifted poly-Cauchy numbers with a `q` parameter, from the ordinary
/// Stirling numbers of the first kind.
pub fn shifted_number(kind: CauchyKind, p: &MultiParam) -> Result<Rational> {
    p.validate()?;
    let lp = p.l_product();
    let s: Rational = (0..=p.n)
        .map(|m| {
            let qq = match kind {
                CauchyKind::First => -p.q.clone(),
                CauchyKind::Second => p.q.clone(),
            };
            pow(&qq, p.n - m) * pow(&lp, m + p.a) * weight(m + p.a - 1, p.k) * stirling1(p.n, m)
        })
        .sum();
    Ok(match kind {
        CauchyKind::First => s,
        CauchyKind::Second => sign(p.n) * s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn poly(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn classical_examples() {
        let c2 = cauchy_poly(CauchyKind::First, 2, 1, Construction::Gsn).unwrap();
        assert_eq!(c2, poly(&[(-1, 6), (0, 1), (1, 1)]));
        let h3 = cauchy_poly(CauchyKind::Second, 3, 1, Construction::Gsn).unwrap();
        assert_eq!(h3, poly(&[(-9, 4), (6, 1), (-9, 2), (1, 1)]));
        assert_eq!(cauchy_number(CauchyKind::First, 4, 1).unwrap(), q(-19, 30));
        assert_eq!(cauchy_number(CauchyKind::Second, 6, 1).unwrap(), q(19087, 84));
        assert_eq!(cauchy_number(CauchyKind::First, 2, 2).unwrap(), q(-5, 36));
    }

    #[test]
    fn poly_cauchy_constant_term() {
        let expected = q(-120, 4) + q(274, 9) - q(225, 16) + q(85, 25) - q(15, 36) + q(1, 49);
        assert_eq!(cauchy(CauchyKind::First, 6, 2).coeff(0), expected);
    }

    #[test]
    fn constructions_agree() {
        for kind in [CauchyKind::First, CauchyKind::Second] {
            for n in 0..=8 {
                let canon = cauchy(kind, n, 1);
                for c in Construction::ALL {
                    assert_eq!(cauchy_poly(kind, n, 1, c).unwrap(), canon, "{kind:?} n={n} {c:?}");
                }
                for k in 2..=4 {
                    let canon = cauchy(kind, n, k);
                    for c in [Construction::Integral, Construction::BinomialConv] {
                        assert_eq!(cauchy_poly(kind, n, k, c).unwrap(), canon, "{kind:?} n={n} k={k} {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_constructions() {
        assert!(cauchy_poly(CauchyKind::First, 3, 2, Construction::Series).is_err());
        assert!(cauchy_poly(CauchyKind::First, 3, 2, Construction::Bernoulli).is_err());
        assert!(cauchy_poly(CauchyKind::First, 3, 0, Construction::Gsn).is_err());
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(cauchy_coefficient(CauchyKind::First, 3, 2, 1).unwrap(), q(-3, 2));
        assert_eq!(cauchy_coefficient(CauchyKind::Second, 4, 3, 1).unwrap(), int(-8));
        assert!(cauchy_coefficient(CauchyKind::First, 3, 4, 1).is_err());
        for n in 0..=8 {
            assert_eq!(cauchy_coefficient(CauchyKind::First, n, n, 1).unwrap(), sign(n));
            assert_eq!(cauchy_coefficient(CauchyKind::Second, n, n, 1).unwrap(), int(1));
            for k in 1..=3 {
                for kind in [CauchyKind::First, CauchyKind::Second] {
                    let p = cauchy(kind, n, k);
                    for i in 0..=n {
                        assert_eq!(cauchy_coefficient(kind, n, i, k).unwrap(), p.coeff(i));
                    }
                }
            }
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(cauchy_derivative(CauchyKind::First, 2, 1, 1).unwrap(), poly(&[(0, 1), (2, 1)]));
        assert_eq!(cauchy_derivative(CauchyKind::Second, 2, 1, 1).unwrap(), poly(&[(-2, 1), (2, 1)]));
        for kind in [CauchyKind::First, CauchyKind::Second] {
            for n in 0..=7 {
                for k in 1..=3 {
                    let p = cauchy(kind, n, k);
                    assert_eq!(cauchy_derivative(kind, n, k, 0).unwrap(), p);
                    for i in 1..=n + 1 {
                        assert_eq!(cauchy_derivative(kind, n, k, i).unwrap(), p.derivative(i));
                    }
                }
            }
        }
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(cauchy_recurrence_step(CauchyKind::First, 0, 1).unwrap(), poly(&[(1, 2), (-1, 1)]));
        assert_eq!(cauchy_recurrence_step(CauchyKind::Second, 0, 1).unwrap(), poly(&[(-1, 2), (1, 1)]));
        assert_eq!(cauchy_recurrence_step(CauchyKind::First, 3, 2).unwrap(), cauchy(CauchyKind::First, 4, 2));
    }

    #[test]
    fn aux_examples() {
        assert_eq!(c_aux_poly(0, 3), RatPoly::one());
        assert_eq!(c_aux_poly(1, 2), poly(&[(-1, 4), (1, 1)]));
        assert_eq!(c_aux_poly_l(1, &[int(1)]), poly(&[(-1, 2), (1, 1)]));
        assert_eq!(c_aux_poly_l(0, &[q(1, 2), int(3)]), RatPoly::constant(q(3, 2)));
        for j in 0..6 {
            assert_eq!(c_aux_poly_l(j, &[int(1), int(1)]), c_aux_poly(j, 2));
        }
    }

    #[test]
    fn multiparam_reduces_to_poly_cauchy() {
        for kind in [CauchyKind::First, CauchyKind::Second] {
            for k in 1..=3 {
                for n in 0..=6 {
                    let p = MultiParam::new(n, 1, int(1), vec![int(1); k], int(0)).unwrap();
                    assert_eq!(multiparam_cauchy(kind, &p).unwrap(), cauchy(kind, n, k));
                }
            }
        }
    }

    #[test]
    fn multiparam_matches_integral() {
        for kind in [CauchyKind::First, CauchyKind::Second] {
            for a in 1..=3 {
                for n in 0..=5 {
                    let p = MultiParam::new(n, a, q(-1, 2), vec![q(2, 3), int(-2)], q(5, 7)).unwrap();
                    let lhs = multiparam_cauchy(kind, &p).unwrap();
                    assert_eq!(lhs, multiparam_cauchy_integral(kind, &p).unwrap());
                    assert_eq!(lhs.degree(), Some(n + a - 1));
                }
            }
        }
    }

    #[test]
    fn golden_ratio_evaluation() {
        let p = MultiParam::new(4, 1, int(-3), vec![int(1), int(1), q(1, 2)], q(-3, 2)).unwrap();
        let first = multiparam_cauchy(CauchyKind::First, &p).unwrap();
        assert_eq!(first.eval_quadratic_surd(&int(5)), (q(114177911, 144000), q(-284203, 768)));
        let second = multiparam_cauchy(CauchyKind::Second, &p).unwrap();
        assert_eq!(second.eval_quadratic_surd(&int(5)), (q(14046697, 288000), q(10805, 768)));
        for kind in [CauchyKind::First, CauchyKind::Second] {
            let by_x = multiparam_cauchy(kind, &p).unwrap().eval_quadratic_surd(&int(5));
            let by_y = multiparam_cauchy_in_y(kind, &p, &q(-3, 2)).unwrap().eval_quadratic_surd(&int(5));
            assert_eq!(by_x, by_y);
        }
    }

    #[test]
    fn multiparam_rejects_bad_params() {
        assert!(MultiParam::new(2, 0, int(1), vec![int(1)], int(0)).is_err());
        assert!(MultiParam::new(2, 1, int(1), vec![], int(0)).is_err());
        assert!(MultiParam::new(2, 1, int(1), vec![int(0)], int(0)).is_err());
    }

    #[test]
    fn shifted_numbers_are_values_at_origin() {
        for kind in [CauchyKind::First, CauchyKind::Second] {
            for n in 0..=5 {
                let p = MultiParam::new(n, 2, q(3, 2), vec![q(1, 2), int(2), int(-1)], int(0)).unwrap();
                let v = multiparam_cauchy(kind, &p).unwrap().eval(&int(0));
                assert_eq!(shifted_number(kind, &p).unwrap(), v);
            }
        }
    }
}
