//! Poly-Cauchy polynomials, the auxiliary polynomials `CC_j^(k)`, and the two
//! poly-Bernoulli families.

use num_traits::Zero;
use polycauchy::{
    c_aux_poly, cauchy_poly, central_u, euler_poly, lah, poly_bernoulli_gsn, poly_bernoulli_kl, power_sum_poly,
    CauchyKind, Construction, RatPoly, Rational, StirlingKind, TruncatedSeries,
};

use super::util::*;
use crate::case::{all, same, IdentityCase, Mismatch};
use crate::grid::Dim::*;
use crate::grid::Point;

/// The definitional multiple-integral construction.
fn ik(kind: CauchyKind, n: usize, k: usize) -> Result<RatPoly, Mismatch> {
    Ok(cauchy_poly(kind, n, k, Construction::Integral)?)
}

fn cc(j: usize, k: usize) -> RatPoly {
    c_aux_poly(j, k)
}

fn bb(n: usize, k: usize) -> Result<RatPoly, Mismatch> {
    Ok(poly_bernoulli_gsn(n, k)?)
}

fn bkl(n: usize, k: usize) -> Result<RatPoly, Mismatch> {
    Ok(poly_bernoulli_kl(n, k)?)
}

fn u(n: usize, m: usize) -> Rational {
    central_u(n, m).expect("index in range")
}

fn half_index(p: &Point) -> bool {
    (1..=6).contains(&p.n)
}

/// `sum_{j=lo}^m s^j C(m,j) B_{m-j} CC_j^(k)(x + a)`.
fn bc_sum(m: usize, k: usize, a: &Rational, lo: usize, alternate: bool) -> RatPoly {
    sum_p((lo..=m).map(|j| {
        let s = if alternate { sg(j) } else { z(1) };
        sh(&cc(j, k), a).scale(&(s * binom(m, j) * bn(m - j)))
    }))
}

/// `E^(k)_{2m+1}(x) = sum_{j=0}^{2m} 2^j C(2m+1, j) B_j CC_{2m+1-j}^(k)(x+1)`.
fn euler_k(m: usize, k: usize) -> RatPoly {
    let d = 2 * m + 1;
    sum_p((0..d).map(|j| sh(&cc(d - j, k), &z(1)).scale(&(pw(&z(2), j) * binom(d, j) * bn(j)))))
}

fn whit(p: &Point, n: usize, l: usize) -> Result<Rational, Mismatch> {
    Ok(polycauchy::stirling::whitney(StirlingKind::First, p.m, p.r as i64, n, l)?)
}

/// The polylogarithm generating function `Li_k(1 - e^-t)/(1 - e^-t)`, as an egf sequence.
fn li_egf(order: usize, k: usize) -> Vec<Rational> {
    let u = TruncatedSeries::from_fn(order, |i| if i == 0 { z(0) } else { -sgi(i as i64) / factorial(i) });
    let mut acc = TruncatedSeries::zero(order);
    let mut power = TruncatedSeries::one(order);
    for j in 1..=order + 1 {
        acc = acc.try_add(&power.scale(&invk(j, k))).expect("same order");
        power = power.try_mul(&u).expect("same order");
    }
    acc.egf_sequence()
}

fn g14() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G14.first-from-gsn", "c_n^(k)(x) = sum (-1)^(n-m)/(m+1)^k [n m]_x", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let rhs = sum_p((0..=n).map(|m| g1(n, m).scale(&(sg(n - m) * invk(m + 1, k)))));
            same(ik(FIRST, n, k)?, rhs)
        }),
        IdentityCase::new("G14.second-from-gsn", "c^_n^(k)(-x) = (-1)^n sum 1/(m+1)^k [n m]_x", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let rhs = sum_p((0..=n).map(|m| g1(n, m).scale(&invk(m + 1, k))));
            same(neg(&ik(SECOND, n, k)?), rhs.scale(&sg(n)))
        }),
        IdentityCase::new(
            "G14.coefficients",
            "c_{n,i}^(k) = (-1)^(n+i) sum (-1)^m C(m,i)/(m-i+1)^k [n m] and c^_{n,i}^(k) = (-1)^(n+i) sum C(m,i)/(m-i+1)^k [n m]",
            &[N, I, K],
            |p| {
                let (n, i, k) = (p.n, p.i, p.k);
                let first = sum_r((i..=n).map(|m| sg(m) * invk(m - i + 1, k) * binom(m, i) * stirling1(n, m)));
                let second = sum_r((i..=n).map(|m| invk(m - i + 1, k) * binom(m, i) * stirling1(n, m)));
                all([
                    same(ik(FIRST, n, k)?.coeff(i), sg(n + i) * first),
                    same(ik(SECOND, n, k)?.coeff(i), sg(n + i) * second),
                ])
            },
        ),
        IdentityCase::new("G14.back1", "c_n^(k)(x) = sum (-1)^(n-m) [n m] sum_i C(m,i) (-x)^i/(m-i+1)^k", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let inner = |m: usize| sum_p((0..=m).map(|i| xp(i).scale(&(sg(i) * binom(m, i) * invk(m - i + 1, k)))));
            let rhs = sum_p((0..=n).map(|m| inner(m).scale(&(sg(n - m) * stirling1(n, m)))));
            same(ik(FIRST, n, k)?, rhs)
        }),
        IdentityCase::new("G14.back2", "c^_n^(k)(x) = (-1)^n sum [n m] sum_i C(m,i) (-x)^i/(m-i+1)^k", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let inner = |m: usize| sum_p((0..=m).map(|i| xp(i).scale(&(sg(i) * binom(m, i) * invk(m - i + 1, k)))));
            let rhs = sum_p((0..=n).map(|m| inner(m).scale(&stirling1(n, m))));
            same(ik(SECOND, n, k)?, rhs.scale(&sg(n)))
        }),
        IdentityCase::new(
            "G14.inverted",
            "sum {n m}_x c_m^(k)(x) = 1/(n+1)^k and sum {n m}_x c^_m^(k)(-x) = (-1)^n/(n+1)^k",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let first = sum_p((0..=n).map(|m| g2(n, m) * ck(m, k)));
                let second = sum_p((0..=n).map(|m| g2(n, m) * neg(&chk(m, k))));
                all([same(first, cst(invk(n + 1, k))), same(second, cst(sg(n) * invk(n + 1, k)))])
            },
        ),
        IdentityCase::new("G14.k-equals-one", "c_n^(1)(x) = c_n(x) and c^_n^(1)(x) = c^_n(x)", &[N], |p| {
            all([same(ck(p.n, 1), c(p.n)), same(chk(p.n, 1), ch(p.n))])
        }),
    ]
}

fn g15() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G15.diff1", "c_n^(k)(x+1) - c_n^(k)(x) = -n c_{n-1}^(k)(x+1)", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let f = ik(FIRST, n, k)?;
            same(sh(&f, &z(1)) - f, sh(&ck(n - 1, k), &z(1)).scale(&-zu(n)))
        })
        .min_n(1),
        IdentityCase::new("G15.diff2", "c^_n^(k)(x+1) - c^_n^(k)(x) = n c^_{n-1}^(k)(x)", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let f = ik(SECOND, n, k)?;
            same(sh(&f, &z(1)) - f, chk(n - 1, k).scale(&zu(n)))
        })
        .min_n(1),
        IdentityCase::new(
            "G15.whitney",
            "c_n^(k)(r/m) = sum (-1)^(n-l)/(l+1)^k w_{m,r}(n,l)/m^(n-l) and c^_n^(k)(-r/m) = (-1)^n sum 1/(l+1)^k w_{m,r}(n,l)/m^(n-l)",
            &[N, R, M, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let (mut first, mut second) = (z(0), z(0));
                for l in 0..=n {
                    let t = whit(p, n, l)? * invk(l + 1, k) / pwi(&z(p.m), (n - l) as i64);
                    first += sg(n - l) * t.clone();
                    second += t;
                }
                let at = q(p.r as i64, p.m);
                all([same(ev(&ck(n, k), &at), first), same(ev(&chk(n, k), &-at.clone()), sg(n) * second)])
            },
        ),
        IdentityCase::new("G15.symm5", "c_n^(k)(x) = (-1)^n n! sum c^_m^(k)/m! C(x+n-1, n-m)", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let rhs = sum_p((0..=n).map(|m| bin(&(zu(n) - z(1)), n - m).scale(&(chnk(m, k) / factorial(m)))));
            same(ik(FIRST, n, k)?, rhs.scale(&(sg(n) * factorial(n))))
        }),
        IdentityCase::new("G15.symm6", "c^_n^(k)(x) = n! sum (-1)^m c_m^(k)/m! C(x-m, n-m)", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let rhs = sum_p((0..=n).map(|m| bin(&-zu(m), n - m).scale(&(sg(m) * cnk(m, k) / factorial(m)))));
            same(ik(SECOND, n, k)?, rhs.scale(&factorial(n)))
        }),
        IdentityCase::new(
            "G15.symm7",
            "c_n^(k)(x) = n! sum c_m^(k)/m! C(-x, n-m) = sum (-1)^m c_{n-m}^(k) C(n,m) x^(m)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let mid = sum_p((0..=n).map(|m| bin_neg(&z(0), n - m).scale(&(cnk(m, k) / factorial(m))))).scale(&factorial(n));
                let right = sum_p((0..=n).map(|m| RatPoly::rising(m).scale(&(sg(m) * cnk(n - m, k) * binom(n, m)))));
                let lhs = ik(FIRST, n, k)?;
                all([same(lhs, mid.clone()), same(mid, right)])
            },
        ),
        IdentityCase::new(
            "G15.symm8",
            "c^_n^(k)(x) = n! sum c^_m^(k)/m! C(x, n-m) = sum c^_{n-m}^(k) C(n,m) (x)_m",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let mid = sum_p((0..=n).map(|m| bin(&z(0), n - m).scale(&(chnk(m, k) / factorial(m))))).scale(&factorial(n));
                let right = sum_p((0..=n).map(|m| RatPoly::falling(m).scale(&(chnk(n - m, k) * binom(n, m)))));
                let lhs = ik(SECOND, n, k)?;
                all([same(lhs, mid.clone()), same(mid, right)])
            },
        ),
        IdentityCase::new(
            "G15.recurrence-first",
            "c_{n+1}^(k)(x) = -(n+x) c_n^(k)(x) + (-1)^(n+1) n! sum c^_{m+1}^(k)/m! C(x+n, n-m)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let s = sum_p((0..=n).map(|m| bin(&zu(n), n - m).scale(&(chnk(m + 1, k) / factorial(m)))));
                let rhs = -(lin_pow(&zu(n), 1) * ck(n, k)) + s.scale(&(sg(n + 1) * factorial(n)));
                same(ik(FIRST, n + 1, k)?, rhs)
            },
        ),
        IdentityCase::new(
            "G15.recurrence-second",
            "c^_{n+1}^(k)(x) = (x-n) c^_n^(k)(x) - n! sum (-1)^m c_{m+1}^(k)/m! C(x-m-1, n-m), with the sign settled by G06.k-recurrence-sign",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let s = sum_p((0..=n).map(|m| bin(&-zu(m + 1), n - m).scale(&(sg(m) * cnk(m + 1, k) / factorial(m)))));
                let rhs = lin_pow(&-zu(n), 1) * chk(n, k) - s.scale(&factorial(n));
                same(ik(SECOND, n + 1, k)?, rhs)
            },
        ),
        IdentityCase::new(
            "G15.genk1",
            "d^i c_n^(k)/dx^i = (-1)^i i! sum C(n,m) C(m,i) B_{m-i}^(n+1)(1-x)/(n+1-m)^k",
            &[N, I, K],
            |p| {
                let (n, i, k) = (p.n, p.i, p.k);
                let rhs = sum_p((i..=n).map(|m| {
                    refl(&polycauchy::gen_bernoulli_poly(m - i, n + 1), &z(1)).scale(&(binom(n, m) * binom(m, i) * invk(n + 1 - m, k)))
                }));
                same(ik(FIRST, n, k)?.derivative(i), rhs.scale(&(sg(i) * factorial(i))))
            },
        ),
        IdentityCase::new(
            "G15.genk2",
            "d^i c^_n^(k)/dx^i = i! sum (-1)^(n-m) C(n,m) C(m,i) B_{m-i}^(n+1)(x+1)/(n+1-m)^k",
            &[N, I, K],
            |p| {
                let (n, i, k) = (p.n, p.i, p.k);
                let rhs = sum_p((i..=n).map(|m| {
                    sh(&polycauchy::gen_bernoulli_poly(m - i, n + 1), &z(1))
                        .scale(&(sg(n - m) * binom(n, m) * binom(m, i) * invk(n + 1 - m, k)))
                }));
                same(ik(SECOND, n, k)?.derivative(i), rhs.scale(&factorial(i)))
            },
        ),
        IdentityCase::new(
            "G15.der-first",
            "d^i c_n^(k)/dx^i = i! sum (-1)^m c_{n-m}^(k) C(n,m) [m i]_x",
            &[N, I, K],
            |p| {
                let (n, i, k) = (p.n, p.i, p.k);
                let rhs = sum_p((i..=n).map(|m| g1(m, i).scale(&(sg(m) * cnk(n - m, k) * binom(n, m)))));
                same(ik(FIRST, n, k)?.derivative(i), rhs.scale(&factorial(i)))
            },
        ),
        IdentityCase::new(
            "G15.der-second",
            "d^i c^_n^(k)/dx^i = (-1)^i i! sum (-1)^m c^_{n-m}^(k) C(n,m) [m i]_{-x}",
            &[N, I, K],
            |p| {
                let (n, i, k) = (p.n, p.i, p.k);
                let rhs = sum_p((i..=n).map(|m| neg(&g1(m, i)).scale(&(sg(m) * chnk(n - m, k) * binom(n, m)))));
                same(ik(SECOND, n, k)?.derivative(i), rhs.scale(&(sg(i) * factorial(i))))
            },
        ),
        IdentityCase::new(
            "G15.korec1",
            "sum_{m=r}^n {n-r, m-r}_r c_{m-s}^(k)(s) = sum_{l=s}^r (-1)^(r-l)/(n+l-r-s+1)^k [r-s, l-s]_s",
            &[N, R, S, K],
            |p| {
                let (n, r, s, k) = (p.n, p.r, p.s, p.k);
                let lhs = sum_r((r..=n).map(|m| ev(&g2(n - r, m - r), &zu(r)) * ev(&ck(m - s, k), &zu(s))));
                let rhs = sum_r((s..=r).map(|l| sg(r - l) * invk(n + l - r - s + 1, k) * ev(&g1(r - s, l - s), &zu(s))));
                same(lhs, rhs)
            },
        )
        .when(|p| p.r <= p.n),
        IdentityCase::new(
            "G15.korec2",
            "sum_{m=r}^n {n-r, m-r}_r c^_{m-s}^(k)(-s) = (-1)^(n-s) sum_{l=s}^r 1/(n+l-r-s+1)^k [r-s, l-s]_s",
            &[N, R, S, K],
            |p| {
                let (n, r, s, k) = (p.n, p.r, p.s, p.k);
                let lhs = sum_r((r..=n).map(|m| ev(&g2(n - r, m - r), &zu(r)) * ev(&chk(m - s, k), &-zu(s))));
                let rhs = sum_r((s..=r).map(|l| invk(n + l - r - s + 1, k) * ev(&g1(r - s, l - s), &zu(s))));
                same(lhs, sg(n - s) * rhs)
            },
        )
        .when(|p| p.r <= p.n),
        IdentityCase::new(
            "G15.values-at-one",
            "c_n^(k)(1) = (-1)^n n! sum C(n,m) c^_m^(k)/m! = (-1)^n n! sum (-1)^m c_m^(k)/m!, and the same for c^_n^(k)(-1)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let f = sg(n) * factorial(n);
                let a1 = sum_r((0..=n).map(|m| binom(n, m) * chnk(m, k) / factorial(m)));
                let a2 = sum_r((0..=n).map(|m| sg(m) * cnk(m, k) / factorial(m)));
                let b1 = sum_r((0..=n).map(|m| binom(n, m) * cnk(m, k) / factorial(m)));
                let b2 = sum_r((0..=n).map(|m| sg(m) * chnk(m, k) / factorial(m)));
                let c1 = ev(&ck(n, k), &z(1));
                let c2 = ev(&chk(n, k), &z(-1));
                all([
                    same(c1.clone(), &f * a1),
                    same(c1, &f * a2),
                    same(c2.clone(), &f * b1),
                    same(c2, &f * b2),
                ])
            },
        ),
        IdentityCase::new(
            "G15.lah",
            "c_n^(k) = (-1)^n sum L(n,m) c^_m^(k) and c^_n^(k) = (-1)^n sum L(n,m) c_m^(k)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let a = sum_r((0..=n).map(|m| lah(n, m) * chnk(m, k)));
                let b = sum_r((0..=n).map(|m| lah(n, m) * cnk(m, k)));
                all([same(cnk(n, k), sg(n) * a), same(chnk(n, k), sg(n) * b)])
            },
        ),
        IdentityCase::new("G15.lah-closed", "L(n,m) = n!/m! C(n-1, m-1)", &[N, I], |p| {
            let (n, m) = (p.n, p.i);
            let closed = if n == 0 { delta(m, 0) } else if m == 0 { z(0) } else { factorial(n) / factorial(m) * binom(n - 1, m - 1) };
            same(lah(n, m), closed)
        }),
        IdentityCase::new(
            "G15.genk-at-zero",
            "c_n^(k)(x) = sum C(n,m) B_m^(n+1)(1-x)/(n+1-m)^k and c^_n^(k)(x) = sum (-1)^(n-m) C(n,m) B_m^(n+1)(x+1)/(n+1-m)^k",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let first = sum_p((0..=n).map(|m| {
                    refl(&polycauchy::gen_bernoulli_poly(m, n + 1), &z(1)).scale(&(binom(n, m) * invk(n + 1 - m, k)))
                }));
                let second = sum_p((0..=n).map(|m| {
                    sh(&polycauchy::gen_bernoulli_poly(m, n + 1), &z(1)).scale(&(sg(n - m) * binom(n, m) * invk(n + 1 - m, k)))
                }));
                all([same(ik(FIRST, n, k)?, first), same(ik(SECOND, n, k)?, second)])
            },
        ),
        IdentityCase::new(
            "G15.r-stirling-sums",
            "sum {n m}_r c_{m+r}^(k) = sum (-1)^(r-l)/(n+l+1)^k [r l] and sum {n m}_r c^_{m+r}^(k) = (-1)^(n+r) sum 1/(n+l+1)^k [r l]",
            &[N, R, K],
            |p| {
                let (n, r, k) = (p.n, p.r, p.k);
                let a = sum_r((0..=n).map(|m| ev(&g2(n, m), &zu(r)) * cnk(m + r, k)));
                let b = sum_r((0..=n).map(|m| ev(&g2(n, m), &zu(r)) * chnk(m + r, k)));
                let ra = sum_r((0..=r).map(|l| sg(r - l) * invk(n + l + 1, k) * stirling1(r, l)));
                let rb = sum_r((0..=r).map(|l| invk(n + l + 1, k) * stirling1(r, l)));
                all([same(a, ra), same(b, sg(n + r) * rb)])
            },
        ),
    ]
}

fn g16() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G16.int2", "int_0^1 c_n^(k)(x) dx = c_n - n sum_{j=1}^k c_n^(j)", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let rhs = cn(n) - zu(n) * sum_r((1..=k).map(|j| cnk(n, j)));
            same(ik(FIRST, n, k)?.integrate_01(), rhs)
        }),
        IdentityCase::new(
            "G16.int3",
            "int_0^1 c^_n^(k)(x) dx = c^_n - n sum_{j=1}^k (c^_n^(j) + (n-1) c^_{n-1}^(j))",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let tail = if n == 0 {
                    z(0)
                } else {
                    zu(n) * sum_r((1..=k).map(|j| chnk(n, j) + zu(n - 1) * chnk(n - 1, j)))
                };
                same(ik(SECOND, n, k)?.integrate_01(), chn(n) - tail)
            },
        ),
        IdentityCase::new(
            "G16.convolutions",
            "int_0^1 c_n^(k) = sum C(n,m) c_m^(k) c^_{n-m} and int_0^1 c^_n^(k) = sum C(n,m) c^_m^(k) c_{n-m}",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let a = sum_r((0..=n).map(|m| binom(n, m) * cnk(m, k) * chn(n - m)));
                let b = sum_r((0..=n).map(|m| binom(n, m) * chnk(m, k) * cn(n - m)));
                all([same(ck(n, k).integrate_01(), a), same(chk(n, k).integrate_01(), b)])
            },
        ),
        IdentityCase::new("G16.k-equals-one", "int_0^1 c_n(x) dx = c_n - n c_n and the same for c^_n", &[N], |p| {
            let n = p.n;
            let tail = if n == 0 { z(0) } else { zu(n) * (chn(n) + zu(n - 1) * chn(n - 1)) };
            all([same(c(n).integrate_01(), cn(n) - zu(n) * cn(n)), same(ch(n).integrate_01(), chn(n) - tail)])
        }),
    ]
}

fn g17() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "G17.polylog-numbers",
            "BB_n^(k)(0) is the n-th coefficient of Li_k(1-e^-t)/(1-e^-t) times n!",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                same(bb(n, k)?.coeff(0), li_egf(n, k)[n].clone())
            },
        ),
        IdentityCase::new("G17.families-at-zero", "BB_n^(k)(0) = bold-B_n^(k)(0)", &[N, K], |p| {
            same(bb(p.n, p.k)?.coeff(0), bkl(p.n, p.k)?.coeff(0))
        }),
        IdentityCase::new("G17.bb1", "BB_n^(k)(x) = (-1)^n sum sum (-1)^m m! {n m}_x {m l}_y c_l^(k)(y)", &[N, K, Y], |p| {
            let (n, k, y) = (p.n, p.k, &p.y);
            let rhs = sum_p((0..=n).map(|m| {
                let w = sum_r((0..=m).map(|l| ev(&g2(m, l), y) * ev(&ck(l, k), y)));
                g2(n, m).scale(&(sg(m) * factorial(m) * w))
            }));
            same(bb(n, k)?, rhs.scale(&sg(n)))
        })
        .double(),
        IdentityCase::new("G17.bb2", "BB_n^(k)(x) = (-1)^n sum sum m! {n m}_x {m l}_y c^_l^(k)(-y)", &[N, K, Y], |p| {
            let (n, k, y) = (p.n, p.k, &p.y);
            let rhs = sum_p((0..=n).map(|m| {
                let w = sum_r((0..=m).map(|l| ev(&g2(m, l), y) * ev(&chk(l, k), &-y.clone())));
                g2(n, m).scale(&(factorial(m) * w))
            }));
            same(bb(n, k)?, rhs.scale(&sg(n)))
        })
        .double(),
        IdentityCase::new("G17.bb3", "c_n^(k)(x) = (-1)^n sum sum (-1)^m/m! [n m]_x [m l]_y BB_l^(k)(y)", &[N, K, Y], |p| {
            let (n, k, y) = (p.n, p.k, &p.y);
            let mut rhs = RatPoly::zero();
            for m in 0..=n {
                let mut w = z(0);
                for l in 0..=m {
                    w += ev(&g1(m, l), y) * ev(&bb(l, k)?, y);
                }
                rhs += g1(n, m).scale(&(sg(m) / factorial(m) * w));
            }
            same(ik(FIRST, n, k)?, rhs.scale(&sg(n)))
        })
        .double(),
        IdentityCase::new("G17.bb4", "c^_n^(k)(-x) = (-1)^n sum sum 1/m! [n m]_x [m l]_y BB_l^(k)(y)", &[N, K, Y], |p| {
            let (n, k, y) = (p.n, p.k, &p.y);
            let mut rhs = RatPoly::zero();
            for m in 0..=n {
                let mut w = z(0);
                for l in 0..=m {
                    w += ev(&g1(m, l), y) * ev(&bb(l, k)?, y);
                }
                rhs += g1(n, m).scale(&(w / factorial(m)));
            }
            same(neg(&ik(SECOND, n, k)?), rhs.scale(&sg(n)))
        })
        .double(),
        IdentityCase::new("G17.inform1", "bold-B_n^(k)(x) = (-1)^n sum sum (-1)^m m! {n m} {m l} c_l^(k)(x)", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let rhs = sum_p((0..=n).flat_map(|m| {
                (0..=m).map(move |l| ck(l, k).scale(&(sg(m) * factorial(m) * stirling2(n, m) * stirling2(m, l))))
            }));
            same(bkl(n, k)?, rhs.scale(&sg(n)))
        })
        .double(),
        IdentityCase::new("G17.inform2", "bold-B_n^(k)(x) = (-1)^n sum sum m! {n m} {m l} c^_l^(k)(x)", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let rhs = sum_p((0..=n).flat_map(|m| {
                (0..=m).map(move |l| chk(l, k).scale(&(factorial(m) * stirling2(n, m) * stirling2(m, l))))
            }));
            same(bkl(n, k)?, rhs.scale(&sg(n)))
        })
        .double(),
        IdentityCase::new("G17.inform3", "c_n^(k)(x) = (-1)^n sum sum (-1)^m/m! [n m] [m l] bold-B_l^(k)(x)", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let mut rhs = RatPoly::zero();
            for m in 0..=n {
                for l in 0..=m {
                    rhs += bkl(l, k)?.scale(&(sg(m) / factorial(m) * stirling1(n, m) * stirling1(m, l)));
                }
            }
            same(ik(FIRST, n, k)?, rhs.scale(&sg(n)))
        })
        .double(),
        IdentityCase::new("G17.inform4", "c^_n^(k)(x) = (-1)^n sum sum 1/m! [n m] [m l] bold-B_l^(k)(x)", &[N, K], |p| {
            let (n, k) = (p.n, p.k);
            let mut rhs = RatPoly::zero();
            for m in 0..=n {
                for l in 0..=m {
                    rhs += bkl(l, k)?.scale(&(stirling1(n, m) * stirling1(m, l) / factorial(m)));
                }
            }
            same(ik(SECOND, n, k)?, rhs.scale(&sg(n)))
        })
        .double(),
    ]
}

fn g18() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "G18.poly1",
            "c_n^(k)(x) = [n = 1] + (-1)^n n sum 1/m [n-1, m-1] sum_{j>=1} C(m,j) B_{m-j} CC_j^(k)(x+1)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let s = sum_p((1..=n).map(|m| bc_sum(m, k, &z(1), 1, false).scale(&(inv(m) * stirling1(n - 1, m - 1)))));
                same(ik(FIRST, n, k)?, cst(delta(n, 1)) + s.scale(&(sg(n) * zu(n))))
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G18.poly2",
            "c^_n^(k)(x) = [n = 1] + (-1)^n n sum 1/m [n-1, m-1] sum_{j>=1} (-1)^j C(m,j) B_{m-j} CC_j^(k)(x-1)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let s = sum_p((1..=n).map(|m| bc_sum(m, k, &z(-1), 1, true).scale(&(inv(m) * stirling1(n - 1, m - 1)))));
                same(ik(SECOND, n, k)?, cst(delta(n, 1)) + s.scale(&(sg(n) * zu(n))))
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G18.poly4-integral",
            "int...int S_{m-1}(t_1...t_k - x - 1) dt = (-1)^m/m sum_{j>=1} C(m,j) B_{m-j} CC_j^(k)(x+1)",
            &[N, K],
            |p| {
                let (m, k) = (p.n, p.k);
                // Expand S_{m-1}(t - x - 1) in powers of t and send t^i to 1/(i+1)^k.
                let s = power_sum_poly(m - 1);
                let lhs = sum_p(s.coeffs().iter().enumerate().flat_map(|(j, sj)| {
                    (0..=j).map(move |i| lin_pow(&z(1), j - i).scale(&(sj * sg(j - i) * binom(j, i) * invk(i + 1, k))))
                }));
                same(lhs, bc_sum(m, k, &z(1), 1, false).scale(&(sg(m) * inv(m))))
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G18.power-sum-bernoulli",
            "S_{m-1}(x) = 1/m sum_{j>=1} (-1)^(m-j) C(m,j) B_{m-j} x^j",
            &[N],
            |p| {
                let m = p.n;
                let rhs = sum_p((1..=m).map(|j| xp(j).scale(&(sg(m - j) * binom(m, j) * bn(m - j)))));
                same(power_sum_poly(m - 1), rhs.scale(&inv(m)))
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G18.poly5",
            "c_n^(k)(x) = c_n + (-1)^n n sum 1/m [n-1, m-1] sum_{j>=0} C(m,j) B_{m-j} CC_j^(k)(x+1)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let s = sum_p((1..=n).map(|m| bc_sum(m, k, &z(1), 0, false).scale(&(inv(m) * stirling1(n - 1, m - 1)))));
                same(ik(FIRST, n, k)?, cst(cn(n)) + s.scale(&(sg(n) * zu(n))))
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G18.poly6",
            "c^_n^(k)(x) = c_n + (-1)^n n sum 1/m [n-1, m-1] sum_{j>=0} (-1)^j C(m,j) B_{m-j} CC_j^(k)(x-1)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let s = sum_p((1..=n).map(|m| bc_sum(m, k, &z(-1), 0, true).scale(&(inv(m) * stirling1(n - 1, m - 1)))));
                same(ik(SECOND, n, k)?, cst(cn(n)) + s.scale(&(sg(n) * zu(n))))
            },
        )
        .min_n(1),
        IdentityCase::new("G18.idc1", "sum C(m,j) B_{m-j} CC_j^(1)(x+1) = x^m", &[N], |p| {
            same(bc_sum(p.n, 1, &z(1), 0, false), xp(p.n))
        }),
        IdentityCase::new("G18.idc2", "sum (-1)^(m-j) C(m,j) B_{m-j} CC_j^(1)(x) = x^m", &[N], |p| {
            let m = p.n;
            let lhs = sum_p((0..=m).map(|j| cc(j, 1).scale(&(sg(m - j) * binom(m, j) * bn(m - j)))));
            same(lhs, xp(m))
        }),
        IdentityCase::new("G18.def1", "CC_j^(k)(x) = sum (-1)^i/(i+1)^k C(j,i) x^(j-i), CC_0 = 1", &[N, K], |p| {
            let (j, k) = (p.n, p.k);
            let expected = if j == 0 {
                one()
            } else {
                sum_p((0..=j).map(|i| xp(j - i).scale(&(sg(i) * invk(i + 1, k) * binom(j, i)))))
            };
            same(cc(j, k), expected)
        }),
    ]
}

/// `sum_{j>=0} s^j C(m,j) B_{m-j} CC_j^(k)(v)` at a number.
fn bc_at(m: usize, k: usize, v: &Rational, alternate: bool) -> Rational {
    sum_r((0..=m).map(|j| {
        let s = if alternate { sg(j) } else { z(1) };
        s * binom(m, j) * bn(m - j) * ev(&cc(j, k), v)
    }))
}

fn g19() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "G19.poly7",
            "-c_n^(k)(x)/n = sum (-1)^n/m [n-1, m-1]_x ((-1)^m B_m(x) - sum C(m,j) B_{m-j} CC_j^(k)(1))",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let rhs = sum_p((1..=n).map(|m| {
                    g1(n - 1, m - 1).scale(&(sg(n) * inv(m))) * (b(m).scale(&sg(m)) - cst(bc_at(m, k, &z(1), false)))
                }));
                same(ik(FIRST, n, k)?.scale(&-inv(n)), rhs)
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G19.poly8",
            "-c^_n^(k)(-x)/n = sum (-1)^n/m [n-1, m-1]_x ((-1)^m B_m(x) - sum (-1)^j C(m,j) B_{m-j} CC_j^(k)(-1))",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let rhs = sum_p((1..=n).map(|m| {
                    g1(n - 1, m - 1).scale(&(sg(n) * inv(m))) * (b(m).scale(&sg(m)) - cst(bc_at(m, k, &z(-1), true)))
                }));
                same(neg(&ik(SECOND, n, k)?).scale(&-inv(n)), rhs)
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G19.alt-first",
            "c_n^(k)(x) = c_n - n sum (-1)^n/m [n-1, m-1]_x ((-x)^m - sum C(m,j) B_{m-j} CC_j^(k)(1))",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let s = sum_p((1..=n).map(|m| {
                    g1(n - 1, m - 1).scale(&(sg(n) * inv(m))) * (neg(&xp(m)) - cst(bc_at(m, k, &z(1), false)))
                }));
                same(ik(FIRST, n, k)?, cst(cn(n)) - s.scale(&zu(n)))
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G19.alt-second",
            "c^_n^(k)(-x) = c^_n - n sum (-1)^n/m [n-1, m-1]_x ((1-x)^m - sum (-1)^j C(m,j) B_{m-j} CC_j^(k)(-1))",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let s = sum_p((1..=n).map(|m| {
                    g1(n - 1, m - 1).scale(&(sg(n) * inv(m))) * (refl(&xp(m), &z(1)) - cst(bc_at(m, k, &z(-1), true)))
                }));
                same(neg(&ik(SECOND, n, k)?), cst(chn(n)) - s.scale(&zu(n)))
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G19.k-equals-one-first",
            "c_n(x) = c_n - (-1)^n n sum (-1)^m/m [n-1, m-1]_x x^m",
            &[N],
            |p| {
                let n = p.n;
                let f = sum_p((1..=n).map(|m| (g1(n - 1, m - 1) * xp(m)).scale(&(sg(m) * inv(m)))));
                same(c(n), cst(cn(n)) - f.scale(&(sg(n) * zu(n))))
            },
        )
        .min_n(1),
        IdentityCase::probe(
            "G19.k-equals-one-second",
            "c^_n(-x) = c^_n - (-1)^n n sum (-1)^m/m [n-1, m-1]_x ((x-1)^m - 1)",
            &[N],
            &["((x-1)^m - 1) as printed", "((x-1)^m - (-1)^m)"],
            |p| {
                let n = p.n;
                let with = |tail: fn(usize) -> Rational| {
                    let s = sum_p((1..=n).map(|m| {
                        (g1(n - 1, m - 1) * (lin_pow(&z(-1), m) - cst(tail(m)))).scale(&(sg(m) * inv(m)))
                    }));
                    same(neg(&ch(n)), cst(chn(n)) - s.scale(&(sg(n) * zu(n))))
                };
                vec![with(|_| z(1)), with(sg)]
            },
        )
        .min_n(1),
    ]
}

fn g20() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "G20.even-first",
            "c_{2n}^(k)(x) = n sum u(n,m)/m sum_{j<2m} C(2m,j) B_j CC_{2m-j}^(k)(x+n)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let rhs = sum_p((1..=n).map(|m| {
                    let inner = sum_p((0..2 * m).map(|j| sh(&cc(2 * m - j, k), &zu(n)).scale(&(binom(2 * m, j) * bn(j)))));
                    inner.scale(&(u(n, m) * inv(m)))
                }));
                same(ik(FIRST, 2 * n, k)?, rhs.scale(&zu(n)))
            },
        )
        .when(half_index),
        IdentityCase::new(
            "G20.even-second",
            "c^_{2n}^(k)(x) = n sum u(n,m)/m sum_{j<2m} (-1)^j C(2m,j) B_j CC_{2m-j}^(k)(x-n)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let rhs = sum_p((1..=n).map(|m| {
                    let inner =
                        sum_p((0..2 * m).map(|j| sh(&cc(2 * m - j, k), &-zu(n)).scale(&(sg(j) * binom(2 * m, j) * bn(j)))));
                    inner.scale(&(u(n, m) * inv(m)))
                }));
                same(ik(SECOND, 2 * n, k)?, rhs.scale(&zu(n)))
            },
        )
        .when(half_index),
        IdentityCase::new(
            "G20.odd-first",
            "c_{2n+1}^(k)(x) = -(2n+1) sum u(n,m)/(2m+1) sum_{j<=2m} 2^j C(2m+1,j) B_j CC_{2m+1-j}^(k)(x+n+1)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let rhs = sum_p((1..=n).map(|m| sh(&euler_k(m, k), &zu(n)).scale(&(u(n, m) * inv(2 * m + 1)))));
                same(ik(FIRST, 2 * n + 1, k)?, rhs.scale(&-zu(2 * n + 1)))
            },
        )
        .when(half_index),
        IdentityCase::new(
            "G20.odd-second",
            "c^_{2n+1}^(k)(x) = (2n+1) sum u(n,m)/(2m+1) sum_{j<=2m} 2^j C(2m+1,j) B_j CC_{2m+1-j}^(k)(x-n+1)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let rhs = sum_p((1..=n).map(|m| sh(&euler_k(m, k), &-zu(n)).scale(&(u(n, m) * inv(2 * m + 1)))));
                same(ik(SECOND, 2 * n + 1, k)?, rhs.scale(&zu(2 * n + 1)))
            },
        )
        .when(half_index),
        IdentityCase::new(
            "G20.even-reduces",
            "sum_{j<2m} C(2m,j) B_j CC_{2m-j}^(1)(x+n) = (x+n-1)^(2m) - B_{2m}",
            &[N, M],
            |p| {
                let (m, n) = (p.n, p.m);
                let lhs = sum_p((0..2 * m).map(|j| sh(&cc(2 * m - j, 1), &z(n)).scale(&(binom(2 * m, j) * bn(j)))));
                same(lhs, lin_pow(&z(n - 1), 2 * m) - cst(bn(2 * m)))
            },
        )
        .min_n(1),
        IdentityCase::new("G20.euler-odd", "E_{2m+1}(x) = sum_{j<=2m} 2^j C(2m+1,j) B_j CC_{2m+1-j}^(1)(x+1)", &[N], |p| {
            same(euler_poly(2 * p.n + 1), euler_k(p.n, 1))
        })
        .min_n(1),
        IdentityCase::new(
            "G20.euler-odd-at-zero",
            "sum 2^j C(2m+1,j) B_j CC_{2m+1-j}^(1)(1) = (1 - 2^(2m+2))/(m+1) B_{2m+2}",
            &[N],
            |p| {
                let m = p.n;
                same(ev(&euler_k(m, 1), &z(0)), (z(1) - pw(&z(2), 2 * m + 2)) * inv(m + 1) * bn(2 * m + 2))
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G20.euler-even",
            "E_{2m}(x) = sum_{j<2m} 2^j C(2m,j) B_j (CC_{2m-j}^(1)(x+1) - CC_{2m-j}^(1)(1)), E_{2m}(0) = 0",
            &[N],
            |p| {
                let m = p.n;
                let d = 2 * m;
                let rhs = sum_p((0..d).map(|j| {
                    let cj = cc(d - j, 1);
                    (sh(&cj, &z(1)) - cst(ev(&cj, &z(1)))).scale(&(pw(&z(2), j) * binom(d, j) * bn(j)))
                }));
                let e = euler_poly(d);
                all([same(ev(&e, &z(0)), z(0)), same(e, rhs)])
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G20.euler-k-compact",
            "c_{2n+1}^(k)(x) = -(2n+1) sum u(n,m)/(2m+1) E_{2m+1}^(k)(x+n) and c^_{2n+1}^(k)(x) = (2n+1) sum u(n,m)/(2m+1) E_{2m+1}^(k)(x-n)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let f = sum_p((1..=n).map(|m| sh(&euler_k(m, k), &zu(n)).scale(&(u(n, m) * inv(2 * m + 1)))));
                let s = sum_p((1..=n).map(|m| sh(&euler_k(m, k), &-zu(n)).scale(&(u(n, m) * inv(2 * m + 1)))));
                all([
                    same(ck(2 * n + 1, k), f.scale(&-zu(2 * n + 1))),
                    same(chk(2 * n + 1, k), s.scale(&zu(2 * n + 1))),
                ])
            },
        )
        .when(half_index),
    ]
}

pub(super) fn cases() -> Vec<IdentityCase> {
    let mut v = g14();
    for part in [g15(), g16(), g17(), g18(), g19(), g20()] {
        v.extend(part);
    }
    v
}
