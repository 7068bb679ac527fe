//! Short names for the families the checks are written in.

use num_traits::{One, Zero};
use polycauchy::cauchy::number;
use polycauchy::exact::{pow, pow_i, sign};
use polycauchy::stirling::{gsn1_poly, gsn2_poly};
use polycauchy::{bernoulli_number, bernoulli_poly, cauchy, int, CauchyKind, RatPoly, Rational};

pub use polycauchy::exact::{binom, factorial};
pub use polycauchy::{q, stirling1, stirling2};

pub const FIRST: CauchyKind = CauchyKind::First;
pub const SECOND: CauchyKind = CauchyKind::Second;

pub fn c(n: usize) -> RatPoly {
    cauchy(FIRST, n, 1)
}

pub fn ch(n: usize) -> RatPoly {
    cauchy(SECOND, n, 1)
}

pub fn ck(n: usize, k: usize) -> RatPoly {
    cauchy(FIRST, n, k)
}

pub fn chk(n: usize, k: usize) -> RatPoly {
    cauchy(SECOND, n, k)
}

pub fn cn(n: usize) -> Rational {
    number(FIRST, n, 1)
}

pub fn chn(n: usize) -> Rational {
    number(SECOND, n, 1)
}

pub fn cnk(n: usize, k: usize) -> Rational {
    number(FIRST, n, k)
}

pub fn chnk(n: usize, k: usize) -> Rational {
    number(SECOND, n, k)
}

pub fn g1(n: usize, m: usize) -> RatPoly {
    gsn1_poly(n, m)
}

pub fn g2(n: usize, m: usize) -> RatPoly {
    gsn2_poly(n, m)
}

pub fn b(n: usize) -> RatPoly {
    bernoulli_poly(n)
}

pub fn bn(n: usize) -> Rational {
    bernoulli_number(n)
}

pub fn z(n: i64) -> Rational {
    int(n)
}

pub fn zu(n: usize) -> Rational {
    int(n as i64)
}

/// `(-1)^n`.
pub fn sg(n: usize) -> Rational {
    sign(n)
}

pub fn sgi(n: i64) -> Rational {
    polycauchy::exact::sign_i(n)
}

pub fn pw(r: &Rational, e: usize) -> Rational {
    pow(r, e)
}

pub fn pwi(r: &Rational, e: i64) -> Rational {
    pow_i(r, e)
}

pub fn inv(n: usize) -> Rational {
    Rational::one() / zu(n)
}

/// `1/n^k`.
pub fn invk(n: usize, k: usize) -> Rational {
    Rational::one() / pw(&zu(n), k)
}

pub fn delta(a: usize, b: usize) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

pub fn x() -> RatPoly {
    RatPoly::x()
}

pub fn cst(r: Rational) -> RatPoly {
    RatPoly::constant(r)
}

pub fn xp(m: usize) -> RatPoly {
    RatPoly::monomial(int(1), m)
}

/// `(x + a)^m`.
pub fn lin_pow(a: &Rational, m: usize) -> RatPoly {
    (x() + cst(a.clone())).pow(m)
}

/// `C(x + shift, n)`.
pub fn bin(shift: &Rational, n: usize) -> RatPoly {
    RatPoly::binom_poly(shift, 1, n)
}

/// `C(-x + shift, n)`.
pub fn bin_neg(shift: &Rational, n: usize) -> RatPoly {
    RatPoly::binom_poly(shift, -1, n)
}

/// `p(-x)`.
pub fn neg(p: &RatPoly) -> RatPoly {
    p.reflect()
}

/// `p(x + a)`.
pub fn sh(p: &RatPoly, a: &Rational) -> RatPoly {
    p.shift(a)
}

/// `p(a - x)`.
pub fn refl(p: &RatPoly, a: &Rational) -> RatPoly {
    p.affine_compose(-1, a)
}

pub fn ev(p: &RatPoly, v: &Rational) -> Rational {
    p.eval(v)
}

pub fn sum_p(it: impl Iterator<Item = RatPoly>) -> RatPoly {
    it.fold(RatPoly::zero(), |acc, p| acc + p)
}

pub fn sum_r(it: impl Iterator<Item = Rational>) -> Rational {
    it.fold(Rational::zero(), |acc, r| acc + r)
}

pub fn one() -> RatPoly {
    RatPoly::one()
}
