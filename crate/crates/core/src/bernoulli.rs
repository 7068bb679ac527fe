//! Bernoulli numbers and polynomials, higher-order Bernoulli polynomials,
//! Euler and power-sum polynomials, and the poly-Bernoulli variants.
//!
//! Higher-order Bernoulli polynomials `B_n^(alpha)(x)` are read off the
//! generating function `(t/(e^t - 1))^alpha e^(xt)` and memoized per order.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::Zero;

use crate::cauchy::{c_aux_poly_l, MultiParam};
use crate::error::{domain, Result};
use crate::exact::{binom, factorial, int, pow, q, sign, Rational};
use crate::poly::RatPoly;
use crate::series::{gf_gen_bernoulli, DEFAULT_ORDER};
use crate::stirling::{gsn2_poly, stirling2, stirling_pair_at, StirlingKind};

static GEN_BERNOULLI: RwLock<Option<HashMap<usize, Vec<RatPoly>>>> = RwLock::new(None);

/// Higher-order Bernoulli polynomial `B_n^(alpha)(x)` for integer `alpha >= 0`.
pub fn gen_bernoulli_poly(n: usize, alpha: usize) -> RatPoly {
    {
        let guard = GEN_BERNOULLI.read().expect("bernoulli lock poisoned");
        if let Some(p) = guard.as_ref().and_then(|m| m.get(&alpha)).and_then(|v| v.get(n)) {
            return p.clone();
        }
    }
    let order = n.max(DEFAULT_ORDER);
    let seq = gf_gen_bernoulli(alpha, order).egf_sequence();
    let p = seq[n].clone();
    let mut guard = GEN_BERNOULLI.write().expect("bernoulli lock poisoned");
    let table = guard.get_or_insert_with(HashMap::new);
    let keep = table.get(&alpha).is_some_and(|v| v.len() >= seq.len());
    if !keep {
        table.insert(alpha, seq);
    }
    p
}

pub fn bernoulli_poly(n: usize) -> RatPoly {
    gen_bernoulli_poly(n, 1)
}

/// `B_n = B_n(0)`, with `B_1 = -1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    bernoulli_poly(n).coeff(0)
}

/// Power-sum polynomial `S_n(x)`, with `S_n(m) = 1^n + ... + m^n`.
pub fn power_sum_poly(n: usize) -> RatPoly {
    let b = bernoulli_poly(n + 1);
    let at_one = b.eval(&int(1));
    (b.shift(&int(1)) - RatPoly::constant(at_one)).scale(&q(1, n as i64 + 1))
}

/// Euler polynomial `E_n(x) = (2/(n+1)) (B_{n+1}(x) - 2^(n+1) B_{n+1}(x/2))`.
pub fn euler_poly(n: usize) -> RatPoly {
    let b = bernoulli_poly(n + 1);
    let half = b.dilate(&q(1, 2)).scale(&pow(&int(2), n + 1));
    (b - half).scale(&q(2, n as i64 + 1))
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(domain("poly-Bernoulli polynomials need k >= 1"));
    }
    Ok(())
}

/// `BB_n^(k)(x) = (-1)^n sum_m (-1)^m m!/(m+1)^k {n m}_x`.
pub fn poly_bernoulli_gsn(n: usize, k: usize) -> Result<RatPoly> {
    check_k(k)?;
    Ok((0..=n)
        .map(|m| {
            let w = sign(n + m) * factorial(m) / pow(&int(m as i64 + 1), k);
            gsn2_poly(n, m).scale(&w)
        })
        .sum())
}

/// Poly-Bernoulli polynomials with the inner binomial sum:
/// `(-1)^n sum_m (-1)^m m! {n m} sum_i C(m,i) (-x)^i/(m-i+1)^k`.
pub fn poly_bernoulli_kl(n: usize, k: usize) -> Result<RatPoly> {
    check_k(k)?;
    let mut acc = RatPoly::zero();
    for m in 0..=n {
        let inner: RatPoly = (0..=m)
            .map(|i| {
                RatPoly::monomial(
                    sign(i) * binom(m, i) / pow(&int((m - i) as i64 + 1), k),
                    i,
                )
            })
            .sum();
        acc += inner.scale(&(sign(n + m) * factorial(m) * stirling2(n, m)));
    }
    Ok(acc)
}

/// Multiparameter poly-Bernoulli polynomial
/// `(-1)^n sum_m m! {n m}_(y,q) CC_{m+a-1}^(k)(x; L)`.
pub fn multiparam_poly_bernoulli(p: &MultiParam) -> Result<RatPoly> {
    p.validate()?;
    if p.q.is_zero() {
        return Err(domain("multiparameter poly-Bernoulli polynomials need q != 0"));
    }
    let mut acc = RatPoly::zero();
    for m in 0..=p.n {
        let s = stirling_pair_at(StirlingKind::Second, p.n, m, &p.y, &p.q)?;
        let aux = c_aux_poly_l(m + p.a - 1, &p.l);
        acc += aux.scale(&(factorial(m) * s));
    }
    Ok(acc.scale(&sign(p.n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn poly(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    /// Bernoulli numbers from `sum_{j<=n} C(n+1, j) B_j = 0`, independent of the series.
    fn bernoulli_by_recurrence(max: usize) -> Vec<Rational> {
        let mut b: Vec<Rational> = vec![int(1)];
        for n in 1..=max {
            let s: Rational = (0..n).map(|j| binom(n + 1, j) * &b[j]).sum();
            b.push(-s / int(n as i64 + 1));
        }
        b
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli_poly(2), poly(&[(1, 6), (-1, 1), (1, 1)]));
        assert_eq!(bernoulli_poly(4).eval(&int(0)), q(-1, 30));
        for n in 0..8 {
            assert_eq!(gen_bernoulli_poly(n, 0), RatPoly::monomial(int(1), n));
        }
        assert_eq!(bernoulli_number(1), q(-1, 2));
    }

    #[test]
    fn bernoulli_numbers_match_recurrence() {
        let oracle = bernoulli_by_recurrence(20);
        for (n, b) in oracle.iter().enumerate() {
            assert_eq!(bernoulli_number(n), *b, "B_{n}");
        }
        for m in 1..10 {
            assert!(bernoulli_number(2 * m + 1).is_zero());
        }
    }

    #[test]
    fn bernoulli_value_at_one() {
        for n in 0..14 {
            assert_eq!(bernoulli_poly(n).eval(&int(1)), sign(n) * bernoulli_number(n));
        }
    }

    #[test]
    fn difference_equation() {
        for n in 1..=12 {
            let b = bernoulli_poly(n);
            let lhs = b.shift(&int(1)) - b;
            assert_eq!(lhs, RatPoly::monomial(int(n as i64), n - 1), "n={n}");
        }
    }

    #[test]
    fn appell_rule() {
        for alpha in 0..=5 {
            for n in 1..=10 {
                assert_eq!(
                    gen_bernoulli_poly(n, alpha).derivative(1),
                    gen_bernoulli_poly(n - 1, alpha).scale(&int(n as i64)),
                    "n={n} alpha={alpha}"
                );
            }
        }
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum_poly(2).eval(&int(3)), int(14));
        assert_eq!(power_sum_poly(1), poly(&[(0, 1), (1, 2), (1, 2)]));
        for n in 1..8 {
            assert!(power_sum_poly(n).eval(&int(0)).is_zero());
            for m in 1..7i64 {
                let direct: Rational = (1..=m).map(|j| pow(&int(j), n)).sum();
                assert_eq!(power_sum_poly(n).eval(&int(m)), direct);
            }
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_poly(0), RatPoly::one());
        assert_eq!(euler_poly(1), poly(&[(-1, 2), (1, 1)]));
        assert_eq!(euler_poly(3).eval(&int(0)), q(1, 4));
    }

    #[test]
    fn euler_matches_half_interval_integral() {
        // int_a^{a+1/2} B_n = E_n(2a)/2^(n+1)
        for n in 0..10 {
            let anti = bernoulli_poly(n).antiderivative();
            for a in [q(0, 1), q(1, 3), q(-3, 2), q(2, 1)] {
                let lhs = anti.eval(&(&a + q(1, 2))) - anti.eval(&a);
                let rhs = euler_poly(n).eval(&(int(2) * &a)) / pow(&int(2), n + 1);
                assert_eq!(lhs, rhs, "n={n} a={a}");
            }
        }
    }

    #[test]
    fn euler_symmetry_and_recurrence() {
        // E_n(x+1) + E_n(x) = 2 x^n characterizes the Euler polynomials
        for n in 0..12 {
            let e = euler_poly(n);
            assert_eq!(e.shift(&int(1)) + e, RatPoly::monomial(int(2), n));
        }
    }

    #[test]
    fn poly_bernoulli_examples() {
        assert_eq!(poly_bernoulli_gsn(1, 2).unwrap().eval(&int(0)), q(1, 4));
        for k in 1..4 {
            assert_eq!(poly_bernoulli_gsn(0, k).unwrap(), RatPoly::one());
            assert_eq!(poly_bernoulli_kl(0, k).unwrap(), RatPoly::one());
        }
        // (-1)^2 [ -1!/2 {2 1} + 2!/3 {2 2} ] = -1/2 + 2/3
        assert_eq!(poly_bernoulli_gsn(2, 1).unwrap().eval(&int(0)), q(1, 6));
        assert!(poly_bernoulli_gsn(2, 0).is_err());
        assert!(poly_bernoulli_kl(2, 0).is_err());
        for n in 0..8 {
            for k in 1..4 {
                assert_eq!(
                    poly_bernoulli_kl(n, k).unwrap().eval(&int(0)),
                    poly_bernoulli_gsn(n, k).unwrap().eval(&int(0))
                );
            }
        }
    }

    #[test]
    fn poly_bernoulli_numbers_at_order_one() {
        // With k = 1 the poly-Bernoulli numbers are B_n with B_1 = +1/2.
        for n in 0..10 {
            let expected = if n == 1 { q(1, 2) } else { bernoulli_number(n) };
            assert_eq!(poly_bernoulli_gsn(n, 1).unwrap().eval(&int(0)), expected);
        }
    }

    #[test]
    fn binomial_form_brute_force() {
        // n = 1, k = 1 by direct summation:
        // m=0: {1 0}=0; m=1: -1 * (-1) * 1! * {1 1} * (1/2 - x) = 1/2 - x
        assert_eq!(poly_bernoulli_kl(1, 1).unwrap(), poly(&[(1, 2), (-1, 1)]));
    }

    #[test]
    fn multiparam_poly_bernoulli_cases() {
        let p = MultiParam::new(0, 1, q(3, 2), vec![q(1, 2), int(3)], q(-1, 3)).unwrap();
        assert_eq!(multiparam_poly_bernoulli(&p).unwrap(), RatPoly::constant(q(3, 2)));
        let p = MultiParam::new(1, 1, int(1), vec![int(1)], int(0)).unwrap();
        // (-1) * [0! {1 0}_(0,1) CC_0 + 1! {1 1}_(0,1) CC_1] = -(x - 1/2)
        assert_eq!(multiparam_poly_bernoulli(&p).unwrap(), poly(&[(1, 2), (-1, 1)]));
        let p = MultiParam::new(2, 1, int(0), vec![int(1)], int(0)).unwrap();
        assert!(multiparam_poly_bernoulli(&p).is_err());
    }
}
