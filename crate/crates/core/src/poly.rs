//! Dense univariate polynomials over a commutative ring.
//!
//! Coefficients are stored low degree first and trailing zeros are always
//! trimmed, so the zero polynomial is the empty coefficient list and equality
//! is structural. Bivariate work nests the type: `Polynomial<Polynomial<Rational>>`
//! is a polynomial in an outer variable whose coefficients are polynomials in
//! an inner variable.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::exact::{factorial, int, parse_rational, Rational};
use crate::error::Result;

/// Commutative ring with exact division by nonzero rational scalars.
///
/// Every coefficient ring used here is a Q-algebra, which is what lets
/// series and polynomial code divide by integers exactly.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(r: &Rational) -> Self;

    /// Multiplication by a rational scalar.
    fn scale(&self, r: &Rational) -> Self;

    /// Multiplicative inverse, when one exists in the ring.
    fn try_inverse(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

pub type RatPoly = Polynomial<Rational>;

/// Polynomial in an outer variable with polynomial coefficients.
pub type BiPoly = Polynomial<RatPoly>;

impl<R: Ring> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The generator `x`.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(c: R, degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `s*x + a` with `s` a rational scalar.
    pub fn linear(s: &Rational, a: R) -> Self {
        Self::new(vec![a, R::from_rational(s)])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x0: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x0 + c)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// General composition `p(q(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `q(x) = p(s*x + a)` with `s` in `{+1, -1}`.
    pub fn affine_compose(&self, s: i8, a: &R) -> Self {
        assert!(s == 1 || s == -1, "affine substitution sign must be +1 or -1");
        self.compose(&Self::linear(&int(s as i64), a.clone()))
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &R) -> Self {
        self.affine_compose(1, a)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
                .collect(),
        )
    }

    /// `p(c*x)` for a rational scalar `c`.
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut f = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.scale(&f));
            f *= c;
        }
        Self::new(out)
    }

    /// The `order`-th formal derivative.
    pub fn derivative(&self, order: usize) -> Self {
        if order == 0 {
            return self.clone();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(order)
            .map(|(i, c)| c.scale(&(factorial(i) / factorial(i - order))))
            .collect();
        Self::new(out)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = vec![R::zero()];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&Rational::new(1.into(), (i as i64 + 1).into()))),
        );
        Self::new(out)
    }

    /// Applies the linear functional `x^i -> weight(i)`.
    pub fn functional(&self, weight: impl Fn(usize) -> Rational) -> R {
        self.coeffs
            .iter()
            .enumerate()
            .fold(R::zero(), |acc, (i, c)| acc + &c.scale(&weight(i)))
    }

    /// `integral_0^1 p(t) dt`.
    pub fn integrate_01(&self) -> R {
        self.functional(|i| Rational::new(1.into(), (i as i64 + 1).into()))
    }

    /// `binom(sign*x + shift, n)` as a polynomial in `x`.
    pub fn binom_poly(shift: &R, sign: i8, n: usize) -> Self {
        let s = int(sign as i64);
        let mut acc = Self::one();
        for j in 0..n {
            let factor = Self::linear(&s, shift.clone() - &R::from_rational(&int(j as i64)));
            acc = &acc * &factor;
        }
        acc.scale(&factorial(n).recip())
    }

    /// Falling factorial `(x)_n`.
    pub fn falling(n: usize) -> Self {
        Self::binom_poly(&R::zero(), 1, n).scale(&factorial(n))
    }

    /// Rising factorial `x(x+1)...(x+n-1)`.
    pub fn rising(n: usize) -> Self {
        let shift = R::from_rational(&int(n as i64 - 1));
        Self::binom_poly(&shift, 1, n).scale(&factorial(n))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl RatPoly {
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| int(c)).collect())
    }

    /// Builds from coefficient strings in `"p/q"` form, index = power.
    pub fn parse_coeffs<S: AsRef<str>>(cs: &[S]) -> Result<Self> {
        let coeffs = cs
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    /// Coefficient strings, index = power; the zero polynomial is empty.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Splits `p(sqrt(d)) = A + B*sqrt(d)` by separating even and odd powers.
    pub fn eval_quadratic_surd(&self, d: &Rational) -> (Rational, Rational) {
        let mut even = Rational::zero();
        let mut odd = Rational::zero();
        let mut dp = Rational::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                even += c * &dp;
            } else {
                odd += c * &dp;
                dp *= d;
            }
        }
        (even, odd)
    }
}

impl<R: Ring> BiPolyExt<R> for Polynomial<Polynomial<R>> {
    fn lift_inner(p: &Polynomial<R>) -> Self {
        Polynomial::constant(p.clone())
    }

    fn eval_inner(&self, x0: &R) -> Polynomial<R> {
        Polynomial::new(self.coeffs.iter().map(|c| c.eval(x0)).collect())
    }
}

/// Helpers for the nested two-variable representation.
pub trait BiPolyExt<R: Ring> {
    /// Embeds a polynomial in the inner variable as a constant in the outer one.
    fn lift_inner(p: &Polynomial<R>) -> Self;

    /// Evaluates every coefficient at `x0`, leaving a polynomial in the outer variable.
    fn eval_inner(&self, x0: &R) -> Polynomial<R>;
}

impl<R: Ring> Ring for Polynomial<R> {
    fn from_rational(r: &Rational) -> Self {
        Self::constant(R::from_rational(r))
    }

    fn scale(&self, r: &Rational) -> Self {
        Polynomial::scale(self, r)
    }

    fn try_inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => self.coeffs[0].try_inverse().map(Self::constant),
            _ => None,
        }
    }
}

impl<R: Ring> Zero for Polynomial<R> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Polynomial<R> {
    fn one() -> Self {
        Polynomial { coeffs: vec![R::one()] }
    }
}

impl<'a, R: Ring> Add<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;

    fn add(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o = o.clone() + c;
        }
        Polynomial::new(out)
    }
}

impl<'a, R: Ring> Sub<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;

    fn sub(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n).map(|i| self.coeff(i) - &rhs.coeff(i)).collect();
        Polynomial::new(out)
    }
}

impl<'a, R: Ring> Mul<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;

    fn mul(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Polynomial::new(out)
    }
}

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Polynomial<R>;

    fn neg(self) -> Polynomial<R> {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Neg for &Polynomial<R> {
    type Output = Polynomial<R>;

    fn neg(self) -> Polynomial<R> {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<'a, R: Ring> $tr<&'a Polynomial<R>> for Polynomial<R> {
            type Output = Polynomial<R>;
            fn $m(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
                (&self).$m(rhs)
            }
        }

        impl<R: Ring> $tr<Polynomial<R>> for Polynomial<R> {
            type Output = Polynomial<R>;
            fn $m(self, rhs: Polynomial<R>) -> Polynomial<R> {
                (&self).$m(&rhs)
            }
        }

        impl<'a, R: Ring> $tr<Polynomial<R>> for &'a Polynomial<R> {
            type Output = Polynomial<R>;
            fn $m(self, rhs: Polynomial<R>) -> Polynomial<R> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> AddAssign<&Polynomial<R>> for Polynomial<R> {
    fn add_assign(&mut self, rhs: &Polynomial<R>) {
        *self = &*self + rhs;
    }
}

impl<R: Ring> AddAssign for Polynomial<R> {
    fn add_assign(&mut self, rhs: Polynomial<R>) {
        *self = &*self + &rhs;
    }
}

impl<R: Ring> SubAssign<&Polynomial<R>> for Polynomial<R> {
    fn sub_assign(&mut self, rhs: &Polynomial<R>) {
        *self = &*self - rhs;
    }
}

impl<R: Ring> SubAssign for Polynomial<R> {
    fn sub_assign(&mut self, rhs: Polynomial<R>) {
        *self = &*self - &rhs;
    }
}

impl<R: Ring> std::iter::Sum for Polynomial<R> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<R: Ring + fmt::Display> Polynomial<R> {
    /// Renders `c0 + c1*v + c2*v^2 ...` skipping zero terms.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            if s.contains(' ') {
                s = format!("({s})");
            }
            terms.push(match i {
                0 => s,
                1 => format!("{s}*{var}"),
                _ => format!("{s}*{var}^{i}"),
            });
        }
        terms.join(" + ")
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use proptest::prelude::*;

    fn p(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn trimming_and_degree() {
        let z = RatPoly::new(vec![int(0), int(0)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(RatPoly::from_ints(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(RatPoly::from_ints(&[5]).degree(), Some(0));
    }

    #[test]
    fn affine_compose_examples() {
        let c1 = p(&[(1, 2), (-1, 1)]);
        assert_eq!(c1.affine_compose(-1, &int(1)), p(&[(-1, 2), (1, 1)]));
        let any = p(&[(3, 7), (0, 1), (-2, 5), (1, 1)]);
        assert_eq!(any.affine_compose(1, &int(0)), any);
        let sq = RatPoly::monomial(int(1), 2);
        assert_eq!(sq.affine_compose(1, &int(1)), RatPoly::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn derivative_examples() {
        let cube = RatPoly::monomial(int(1), 3);
        assert_eq!(cube.derivative(2), RatPoly::from_ints(&[0, 6]));
        let b3 = RatPoly::binom_poly(&int(0), 1, 3);
        assert_eq!(b3, p(&[(0, 1), (1, 3), (-1, 2), (1, 6)]));
        assert_eq!(b3.derivative(1), p(&[(1, 3), (-1, 1), (1, 2)]));
        assert!(RatPoly::from_ints(&[4]).derivative(1).is_zero());
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(RatPoly::binom_poly(&int(0), 1, 2).integrate_01(), q(-1, 12));
        assert_eq!(RatPoly::one().integrate_01(), int(1));
        assert_eq!(p(&[(-1, 2), (1, 1)]).integrate_01(), int(0));
    }

    #[test]
    fn binom_poly_examples() {
        assert_eq!(RatPoly::binom_poly(&int(3), -1, 0), RatPoly::one());
        assert_eq!(RatPoly::binom_poly(&int(0), 1, 2), p(&[(0, 1), (-1, 2), (1, 2)]));
        assert_eq!(RatPoly::binom_poly(&int(1), 1, 2), p(&[(0, 1), (1, 2), (1, 2)]));
        assert_eq!(RatPoly::falling(3), RatPoly::from_ints(&[0, 2, -3, 1]));
        assert_eq!(RatPoly::rising(3), RatPoly::from_ints(&[0, 2, 3, 1]));
    }

    #[test]
    fn eval_examples() {
        let c2 = p(&[(-1, 6), (0, 1), (1, 1)]);
        assert_eq!(c2.eval(&int(0)), q(-1, 6));
        assert_eq!(RatPoly::zero().eval(&q(3, 4)), int(0));
        let ch2 = p(&[(5, 6), (-2, 1), (1, 1)]);
        assert_eq!(ch2.eval(&int(1)), q(-1, 6));
    }

    #[test]
    fn display_form() {
        assert_eq!(p(&[(-1, 6), (0, 1), (1, 1)]).to_string(), "-1/6 + 1*x^2");
        assert_eq!(RatPoly::zero().to_string(), "0");
    }

    #[test]
    fn quadratic_surd_split() {
        // (1 + 2x + 3x^2 + 4x^3) at sqrt(5) = 16 + 22 sqrt(5)
        let poly = RatPoly::from_ints(&[1, 2, 3, 4]);
        assert_eq!(poly.eval_quadratic_surd(&int(5)), (int(16), int(22)));
    }

    fn rat_poly(max_len: usize) -> impl Strategy<Value = RatPoly> {
        proptest::collection::vec((-9i64..10, 1i64..6), 0..max_len)
            .prop_map(|v| RatPoly::new(v.into_iter().map(|(n, d)| q(n, d)).collect()))
    }

    fn bi_poly() -> impl Strategy<Value = BiPoly> {
        proptest::collection::vec(rat_poly(3), 0..3).prop_map(BiPoly::new)
    }

    proptest! {
        #[test]
        fn reflection_is_involution(a in rat_poly(7)) {
            let once = a.affine_compose(-1, &int(1));
            prop_assert_eq!(once.affine_compose(-1, &int(1)), a);
        }

        #[test]
        fn fundamental_theorem(a in rat_poly(7)) {
            prop_assert_eq!(
                a.derivative(1).integrate_01(),
                a.eval(&int(1)) - a.eval(&int(0))
            );
        }

        #[test]
        fn binom_poly_pascal(n in 1usize..9) {
            let lhs = RatPoly::binom_poly(&int(0), 1, n);
            let rhs = RatPoly::binom_poly(&int(-1), 1, n) + RatPoly::binom_poly(&int(-1), 1, n - 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn nested_ring_mul(a in bi_poly(), b in bi_poly(), c in bi_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn eval_is_ring_hom(a in rat_poly(6), b in rat_poly(6), x in (-5i64..6, 1i64..4)) {
            let x0 = q(x.0, x.1);
            prop_assert_eq!((&a * &b).eval(&x0), a.eval(&x0) * b.eval(&x0));
        }
    }
}
