//! Exact rational scalars and the scalar combinatorial helpers shared by
//! every family.
//!
//! [`Rational`] is a normalized arbitrary-precision fraction: the
//! denominator is always positive and coprime to the numerator, so
//! structural equality is value equality. Integers are rationals with
//! denominator one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds the canonical fraction `n/d`.
pub fn rat(n: i64, d: i64) -> Result<Rational> {
    if d == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(BigInt::from(n), BigInt::from(d)))
}

/// `n/d` for literal constants known to have a nonzero denominator.
///
/// # Panics
/// Panics when `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    rat(n, d).expect("literal rational with zero denominator")
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"p/q"` or `"p"` (optionally signed, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(n, d))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `(-1)^n` for a signed exponent.
pub fn sign_i(n: i64) -> Rational {
    sign(n.unsigned_abs() as usize)
}

pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Integer binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binom(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from_integer(acc)
}

/// Generalized binomial coefficient `r(r-1)...(r-n+1)/n!` with a rational
/// top argument.
pub fn binom_scalar(r: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n {
        acc *= r - int(i as i64);
        acc /= int(i as i64 + 1);
    }
    acc
}

pub fn pow(r: &Rational, e: usize) -> Rational {
    num_traits::pow(r.clone(), e)
}

/// `r^e` for a signed exponent; `r` must be nonzero when `e < 0`.
pub fn pow_i(r: &Rational, e: i64) -> Rational {
    if e >= 0 {
        pow(r, e as usize)
    } else {
        pow(&r.recip(), e.unsigned_abs() as usize)
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Harmonic number `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic_number(n: usize) -> Rational {
    (1..=n).map(|i| q(1, i as i64)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(rat(2, 4).unwrap(), q(1, 2));
        assert_eq!(rat(-19, 30).unwrap().to_string(), "-19/30");
        assert_eq!(rat(3, -6).unwrap(), q(-1, 2));
        assert_eq!(rat(3, -6).unwrap().to_string(), "-1/2");
        assert_eq!(rat(1, 0), Err(Error::ZeroDenominator));
        assert_eq!(int(7).to_string(), "7");
    }

    #[test]
    fn binom_scalar_examples() {
        assert_eq!(binom_scalar(&int(5), 2), int(10));
        assert_eq!(binom_scalar(&q(1, 2), 2), q(-1, 8));
        assert_eq!(binom_scalar(&int(-1), 3), int(-1));
        assert_eq!(binom_scalar(&q(3, 7), 0), int(1));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-19/30", "19087/84", "5", "-1"] {
            assert_eq!(fmt_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational(" 2/4 ").unwrap(), q(1, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), q(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic_number(0), int(0));
        assert_eq!(harmonic_number(1), int(1));
        assert_eq!(harmonic_number(3), q(11, 6));
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..25).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn additive_inverse(a in -1000i64..1000, b in 1i64..1000) {
            prop_assert!((rat(a, b).unwrap() + rat(-a, b).unwrap()).is_zero());
        }

        #[test]
        fn field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * a.recip(), Rational::one());
            }
            prop_assert!(a.denom() > &BigInt::zero());
        }

        #[test]
        fn binom_scalar_matches_falling_product(r in small_rat(), n in 0usize..9) {
            let mut prod = Rational::one();
            for i in 0..n {
                prod *= &r - int(i as i64);
            }
            prop_assert_eq!(binom_scalar(&r, n) * factorial(n), prod);
        }

        #[test]
        fn binom_scalar_pascal(r in small_rat(), n in 1usize..9) {
            let below = &r - int(1);
            prop_assert_eq!(
                binom_scalar(&r, n),
                binom_scalar(&below, n) + binom_scalar(&below, n - 1)
            );
        }
    }
}
