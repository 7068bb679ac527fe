//! Truncated formal power series and the generating functions built on them.
//!
//! All series are formal: a `TruncatedSeries` of order `N` carries exactly
//! the coefficients of `t^0 ..= t^N`, trailing zeros included. The generating
//! functions here serve as oracles for the closed-form families.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{factorial, int, q, Rational};
use crate::poly::{RatPoly, Ring};

/// Default truncation order for the oracles.
pub const DEFAULT_ORDER: usize = 12;

#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

pub type PolySeries = TruncatedSeries<RatPoly>;

impl<R: Ring> TruncatedSeries<R> {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![R::one()])
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::new(order, vec![R::zero(), R::one()])
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> R) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }

    /// Lifts a series over `R` into a series over `Polynomial<R>`-like rings.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.zip(rhs, |a, b| a.clone() + b))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.zip(rhs, |a, b| a.clone() - b))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn pow_int(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a unit of `R`.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::NotInvertible)?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = R::zero();
            for j in 1..=m {
                acc = acc + &(self.coeffs[j].clone() * &out[m - j]);
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `exp(s)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // f' = s' f, so m f_m = sum_{j=1}^{m} j s_j f_{m-j}.
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(R::one());
        for m in 1..=n {
            let mut acc = R::zero();
            for j in 1..=m {
                acc = acc + &(self.coeffs[j].scale(&int(j as i64)) * &out[m - j]);
            }
            out.push(acc.scale(&q(1, m as i64)));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Coefficients multiplied by `n!`, i.e. the exponential-generating-function
    /// sequence.
    pub fn egf_sequence(&self) -> Vec<R> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&factorial(n)))
            .collect()
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(())
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl<R: Ring> Add for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;

    /// # Panics
    /// Panics on mismatched orders; use [`TruncatedSeries::try_add`] to handle that case.
    fn add(self, rhs: Self) -> TruncatedSeries<R> {
        self.try_add(rhs).expect("series order mismatch")
    }
}

impl<R: Ring> Sub for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;

    fn sub(self, rhs: Self) -> TruncatedSeries<R> {
        self.try_sub(rhs).expect("series order mismatch")
    }
}

impl<R: Ring> Mul for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;

    fn mul(self, rhs: Self) -> TruncatedSeries<R> {
        self.try_mul(rhs).expect("series order mismatch")
    }
}

impl<R: Ring> Neg for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;

    fn neg(self) -> TruncatedSeries<R> {
        self.map(|c| -c.clone())
    }
}

/// `log(1 + t) = t - t^2/2 + t^3/3 - ...`
pub fn log1p(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |i| {
        if i == 0 {
            Rational::zero()
        } else if i % 2 == 1 {
            q(1, i as i64)
        } else {
            q(-1, i as i64)
        }
    })
}

/// `log(1 + t)/t`, one order deeper than `log1p` so no precision is lost.
fn log1p_over_t(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |i| {
        let v = q(1, i as i64 + 1);
        if i % 2 == 0 {
            v
        } else {
            -v
        }
    })
}

/// `-log(1 - t)/t = sum_i t^i/(i+1)`.
fn neg_log1m_over_t(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |i| q(1, i as i64 + 1))
}

fn lift(s: &TruncatedSeries<Rational>) -> PolySeries {
    s.map(|c| RatPoly::constant(c.clone()))
}

/// `(1 + u t)^(c x)` with `x` the inner polynomial generator, `u = +-1`.
fn one_plus_t_pow_x(order: usize, c: &Rational, u_sign: i64) -> PolySeries {
    let l = log1p(order);
    let log = TruncatedSeries::from_fn(order, |i| {
        let a = l.coeff(i).clone();
        if u_sign < 0 && i % 2 == 1 {
            -a
        } else {
            a
        }
    });
    let x = RatPoly::linear(c, Rational::zero());
    lift(&log).mul_coeff(&x).exp().expect("zero constant term")
}

/// Series whose `t^n` coefficient is `c_n(x)/n!`.
pub fn gf_cauchy1(order: usize) -> PolySeries {
    let t_over_log = log1p_over_t(order).reciprocal().expect("unit constant term");
    &lift(&t_over_log) * &one_plus_t_pow_x(order, &int(-1), 1)
}

/// Series whose `t^n` coefficient is `c^_n(x)/n!`.
pub fn gf_cauchy2(order: usize) -> PolySeries {
    let t_over_log = log1p_over_t(order).reciprocal().expect("unit constant term");
    let one_plus_t = TruncatedSeries::<Rational>::new(order, vec![int(1), int(1)]);
    let inv = one_plus_t.reciprocal().expect("unit constant term");
    let base = &t_over_log * &inv;
    &lift(&base) * &one_plus_t_pow_x(order, &int(1), 1)
}

/// `(t/(e^t - 1))^alpha * e^(x t)`; coefficient `n` times `n!` is `B_n^(alpha)(x)`.
pub fn gf_gen_bernoulli(alpha: usize, order: usize) -> PolySeries {
    let e_minus_one_over_t = TruncatedSeries::from_fn(order, |i| factorial(i + 1).recip());
    let base = e_minus_one_over_t.reciprocal().expect("unit constant term").pow_int(alpha);
    let exp_xt = TruncatedSeries::from_fn(order, |i| {
        RatPoly::monomial(factorial(i).recip(), i)
    });
    &lift(&base) * &exp_xt
}

/// `-log(1 - t)/(1 - t)^x`; coefficient `n` is the hyperharmonic polynomial `H_n^(x)`.
pub fn gf_hyperharmonic(order: usize) -> PolySeries {
    let mut log = neg_log1m_over_t(order).coeffs().to_vec();
    log.insert(0, Rational::zero());
    let log = TruncatedSeries::new(order, log);
    // (1 - t)^(-x) = exp(-x log(1 - t))
    &lift(&log) * &one_plus_t_pow_x(order, &int(-1), -1)
}

/// `-log(1 - t)/(t (1 - t)^(1 - x))`; coefficient `m` is the harmonic polynomial `H_m(x)`.
pub fn gf_harmonic(order: usize) -> PolySeries {
    let log = neg_log1m_over_t(order);
    // (1 - t)^(x - 1) = exp((x - 1) log(1 - t))
    let log1m = TruncatedSeries::from_fn(order, |i| {
        if i == 0 {
            RatPoly::zero()
        } else {
            RatPoly::constant(q(-1, i as i64))
        }
    });
    let x_minus_one = RatPoly::from_ints(&[-1, 1]);
    let factor = log1m.mul_coeff(&x_minus_one).exp().expect("zero constant term");
    &lift(&log) * &factor
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factorial;
    use num_traits::One;

    fn poly(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn kernel_examples() {
        let l = log1p(3);
        assert_eq!(l.coeffs(), &[int(0), int(1), q(-1, 2), q(1, 3)]);
        let one_minus_t = TruncatedSeries::<Rational>::new(3, vec![int(1), int(-1)]);
        assert_eq!(one_minus_t.reciprocal().unwrap().coeffs(), &vec![int(1); 4][..]);
        let e = TruncatedSeries::<Rational>::t(2).exp().unwrap();
        assert_eq!(e.coeffs(), &[int(1), int(1), q(1, 2)]);
    }

    #[test]
    fn kernel_errors() {
        let t = TruncatedSeries::<Rational>::t(3);
        assert_eq!(t.reciprocal(), Err(Error::NotInvertible));
        assert_eq!(TruncatedSeries::<Rational>::one(3).exp(), Err(Error::NonzeroConstantTerm));
        assert!(TruncatedSeries::<Rational>::one(3).try_mul(&TruncatedSeries::one(4)).is_err());
        let x_series = PolySeries::new(2, vec![RatPoly::x()]);
        assert_eq!(x_series.reciprocal(), Err(Error::NotInvertible));
    }

    #[test]
    fn exp_log_round_trip() {
        for n in 0..10 {
            let e = log1p(n).exp().unwrap();
            let expected = TruncatedSeries::<Rational>::new(n, vec![int(1), int(1)]);
            assert_eq!(e, expected);
        }
    }

    #[test]
    fn reciprocal_property() {
        let s = TruncatedSeries::<Rational>::from_fn(8, |i| q(i as i64 * 3 - 5, i as i64 + 2));
        assert!((&s * &s.reciprocal().unwrap()).is_one());
        let ps = PolySeries::from_fn(6, |i| {
            if i == 0 {
                RatPoly::constant(q(3, 2))
            } else {
                RatPoly::from_ints(&[i as i64 + 1, 2, -(i as i64)])
            }
        });
        assert!((&ps * &ps.reciprocal().unwrap()).is_one());
    }

    #[test]
    fn cauchy_series_examples() {
        let g1 = gf_cauchy1(4).egf_sequence();
        assert_eq!(g1[0], RatPoly::one());
        assert_eq!(g1[1], poly(&[(1, 2), (-1, 1)]));
        assert_eq!(g1[4], poly(&[(-19, 30), (0, 1), (4, 1), (4, 1), (1, 1)]));
        let g2 = gf_cauchy2(2).egf_sequence();
        assert_eq!(g2[0], RatPoly::one());
        assert_eq!(g2[1], poly(&[(-1, 2), (1, 1)]));
        assert_eq!(g2[2], poly(&[(5, 6), (-2, 1), (1, 1)]));
    }

    #[test]
    fn bernoulli_series_examples() {
        let b1 = gf_gen_bernoulli(1, 4).egf_sequence();
        assert_eq!(b1[2], poly(&[(1, 6), (-1, 1), (1, 1)]));
        let consts: Vec<_> = b1.iter().map(|p| p.coeff(0)).collect();
        assert_eq!(consts, vec![int(1), q(-1, 2), q(1, 6), int(0), q(-1, 30)]);
        let b0 = gf_gen_bernoulli(0, 5).egf_sequence();
        for (n, p) in b0.iter().enumerate() {
            assert_eq!(*p, RatPoly::monomial(int(1), n));
        }
        let b2 = gf_gen_bernoulli(2, 2).egf_sequence();
        assert_eq!(b2[2], poly(&[(5, 6), (-2, 1), (1, 1)]));
    }

    #[test]
    fn hyperharmonic_and_harmonic_series() {
        let h = gf_hyperharmonic(4);
        assert!(h.coeff(0).is_zero());
        assert_eq!(*h.coeff(2), poly(&[(1, 2), (1, 1)]));
        assert_eq!(*h.coeff(4), poly(&[(1, 4), (11, 12), (3, 4), (1, 6)]));
        let hm = gf_harmonic(2);
        assert_eq!(*hm.coeff(0), RatPoly::one());
        assert_eq!(*hm.coeff(1), poly(&[(3, 2), (-1, 1)]));
    }

    #[test]
    fn egf_scaling() {
        let s = TruncatedSeries::<Rational>::from_fn(5, |_| int(1));
        let seq = s.egf_sequence();
        for (n, v) in seq.iter().enumerate() {
            assert_eq!(*v, factorial(n));
        }
    }
}
