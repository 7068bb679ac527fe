//! Higher-order derivatives of Cauchy polynomials.

use polycauchy::{cauchy_poly, gen_bernoulli_poly, harmonic_number, Construction, RatPoly};

use super::util::*;
use crate::case::{all, same, IdentityCase, Mismatch};
use crate::grid::Dim::*;

fn integral(kind: polycauchy::CauchyKind, n: usize) -> Result<RatPoly, Mismatch> {
    Ok(cauchy_poly(kind, n, 1, Construction::Integral)?)
}

fn gb(n: usize, alpha: usize) -> RatPoly {
    gen_bernoulli_poly(n, alpha)
}

fn one_minus(p: &RatPoly) -> RatPoly {
    refl(p, &z(1))
}

fn plus_one(p: &RatPoly) -> RatPoly {
    sh(p, &z(1))
}

fn hn(n: usize) -> polycauchy::Rational {
    harmonic_number(n)
}

pub(super) fn cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G09.gould", "B_v^(m+1)(x+1) = v! d^(m-v)/dx^(m-v) C(x, m)", &[N, I], |p| {
            let (m, v) = (p.n, p.i);
            same(plus_one(&gb(v, m + 1)), bin(&z(0), m).derivative(m - v).scale(&factorial(v)))
        }),
        IdentityCase::new("G09.gs1ber", "[m i]_x = (-1)^(m-i) C(m,i) B_{m-i}^(m+1)(1-x)", &[N, I], |p| {
            let (m, i) = (p.n, p.i);
            same(g1(m, i), one_minus(&gb(m - i, m + 1)).scale(&(sg(m - i) * binom(m, i))))
        }),
        IdentityCase::new("G09.gbp1", "c_n(x) = sum C(n,m) B_m^(n+1)(1-x)/(n+1-m)", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((0..=n).map(|m| one_minus(&gb(m, n + 1)).scale(&(binom(n, m) * inv(n + 1 - m)))));
            same(integral(FIRST, n)?, rhs)
        }),
        IdentityCase::new("G09.gbp2", "c^_n(x) = sum (-1)^(n-m) C(n,m) B_m^(n+1)(x+1)/(n+1-m)", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((0..=n).map(|m| plus_one(&gb(m, n + 1)).scale(&(sg(n - m) * binom(n, m) * inv(n + 1 - m)))));
            same(integral(SECOND, n)?, rhs)
        }),
        IdentityCase::new("G09.appell", "d^i/dx^i B_m^(a)(x) = i! C(m,i) B_{m-i}^(a)(x)", &[N, I], |p| {
            let (m, i) = (p.n, p.i);
            all((0..=4).map(|alpha| same(gb(m, alpha).derivative(i), gb(m - i, alpha).scale(&(factorial(i) * binom(m, i))))))
        }),
        IdentityCase::new(
            "G09.higher-derivative-first",
            "d^i c_n/dx^i = (-1)^i i! sum C(n,m) C(m,i) B_{m-i}^(n+1)(1-x)/(n+1-m)",
            &[N, I],
            |p| {
                let (n, i) = (p.n, p.i);
                let rhs = sum_p((i..=n).map(|m| {
                    one_minus(&gb(m - i, n + 1)).scale(&(binom(n, m) * binom(m, i) * inv(n + 1 - m)))
                }));
                same(integral(FIRST, n)?.derivative(i), rhs.scale(&(sg(i) * factorial(i))))
            },
        ),
        IdentityCase::new(
            "G09.higher-derivative-second",
            "d^i c^_n/dx^i = i! sum (-1)^(n-m) C(n,m) C(m,i) B_{m-i}^(n+1)(x+1)/(n+1-m)",
            &[N, I],
            |p| {
                let (n, i) = (p.n, p.i);
                let rhs = sum_p((i..=n).map(|m| {
                    plus_one(&gb(m - i, n + 1)).scale(&(sg(n - m) * binom(n, m) * binom(m, i) * inv(n + 1 - m)))
                }));
                same(integral(SECOND, n)?.derivative(i), rhs.scale(&factorial(i)))
            },
        ),
        IdentityCase::new("G09.der1", "d^i c_n/dx^i = i! sum (-1)^m c_{n-m} C(n,m) [m i]_x", &[N, I], |p| {
            let (n, i) = (p.n, p.i);
            let rhs = sum_p((i..=n).map(|m| g1(m, i).scale(&(sg(m) * cn(n - m) * binom(n, m)))));
            same(integral(FIRST, n)?.derivative(i), rhs.scale(&factorial(i)))
        }),
        IdentityCase::new("G09.der2", "d^i c^_n/dx^i = (-1)^i i! sum (-1)^m c^_{n-m} C(n,m) [m i]_{-x}", &[N, I], |p| {
            let (n, i) = (p.n, p.i);
            let rhs = sum_p((i..=n).map(|m| neg(&g1(m, i)).scale(&(sg(m) * chn(n - m) * binom(n, m)))));
            same(integral(SECOND, n)?.derivative(i), rhs.scale(&(sg(i) * factorial(i))))
        }),
        IdentityCase::new(
            "G09.symm-reindexed",
            "c_n(x) = n! sum (-1)^m c_{n-m}/(n-m)! C(x+m-1, m) and c^_n(x) = n! sum c^_{n-m}/(n-m)! C(x, m)",
            &[N],
            |p| {
                let n = p.n;
                let first = sum_p((0..=n).map(|m| bin(&(zu(m) - z(1)), m).scale(&(sg(m) * cn(n - m) / factorial(n - m)))));
                let second = sum_p((0..=n).map(|m| bin(&z(0), m).scale(&(chn(n - m) / factorial(n - m)))));
                all([
                    same(integral(FIRST, n)?, first.scale(&factorial(n))),
                    same(integral(SECOND, n)?, second.scale(&factorial(n))),
                ])
            },
        ),
        IdentityCase::new(
            "G09.binomial-derivatives",
            "d^i C(x+m-1, m) = (i!/m!) [m i]_x and d^i C(x, m) = (-1)^(m-i) (i!/m!) [m i]_{-x}",
            &[N, I],
            |p| {
                let (m, i) = (p.n, p.i);
                let f = factorial(i) / factorial(m);
                all([
                    same(bin(&(zu(m) - z(1)), m).derivative(i), g1(m, i).scale(&f)),
                    same(bin(&z(0), m).derivative(i), neg(&g1(m, i)).scale(&(sg(m - i) * f))),
                ])
            },
        ),
        IdentityCase::new(
            "G09.der1-bernoulli",
            "d^i c_n/dx^i = (-1)^i i! sum c_{n-m} C(n,m) C(m,i) B_{m-i}^(m+1)(1-x)",
            &[N, I],
            |p| {
                let (n, i) = (p.n, p.i);
                let rhs = sum_p((i..=n).map(|m| one_minus(&gb(m - i, m + 1)).scale(&(cn(n - m) * binom(n, m) * binom(m, i)))));
                same(c(n).derivative(i), rhs.scale(&(sg(i) * factorial(i))))
            },
        ),
        IdentityCase::new(
            "G09.der2-bernoulli",
            "d^i c^_n/dx^i = i! sum c^_{n-m} C(n,m) C(m,i) B_{m-i}^(m+1)(x+1)",
            &[N, I],
            |p| {
                let (n, i) = (p.n, p.i);
                let rhs = sum_p((i..=n).map(|m| plus_one(&gb(m - i, m + 1)).scale(&(chn(n - m) * binom(n, m) * binom(m, i)))));
                same(ch(n).derivative(i), rhs.scale(&factorial(i)))
            },
        ),
        IdentityCase::new(
            "G09.der12",
            "d^i c_n/dx^i = (-1)^n n (i-1)! sum C(m-1,i-1) [n-1, m-1] x^(m-i) = (-1)^n n (i-1)! [n-1, i-1]_x",
            &[N, I],
            |p| {
                let (n, i) = (p.n, p.i);
                let lead = sg(n) * zu(n) * factorial(i - 1);
                let mid = sum_p((i..=n).map(|m| RatPoly::monomial(binom(m - 1, i - 1) * stirling1(n - 1, m - 1), m - i)));
                let lhs = integral(FIRST, n)?.derivative(i);
                all([same(lhs, mid.scale(&lead)), same(mid, g1(n - 1, i - 1))])
            },
        )
        .when(|p| p.i >= 1),
        IdentityCase::new(
            "G09.der22",
            "d^i c^_n/dx^i = (-1)^n n (i-1)! sum (-1)^m C(m-1,i-1) [n-1, m-1] (x-1)^(m-i) = (-1)^(n+i) n (i-1)! [n-1, i-1]_{1-x}",
            &[N, I],
            |p| {
                let (n, i) = (p.n, p.i);
                let lead = sg(n) * zu(n) * factorial(i - 1);
                let mid = sum_p((i..=n).map(|m| lin_pow(&z(-1), m - i).scale(&(sg(m) * binom(m - 1, i - 1) * stirling1(n - 1, m - 1)))))
                    .scale(&lead);
                let right = one_minus(&g1(n - 1, i - 1)).scale(&(sg(n + i) * zu(n) * factorial(i - 1)));
                let lhs = integral(SECOND, n)?.derivative(i);
                all([same(lhs, mid.clone()), same(mid, right)])
            },
        )
        .when(|p| p.i >= 1),
        IdentityCase::new("G09.gder1", "sum (-1)^(n-m) c_{n-m} C(n,m) [m i]_x = (n/i) [n-1, i-1]_x", &[N, I], |p| {
            let (n, i) = (p.n, p.i);
            let lhs = sum_p((i..=n).map(|m| g1(m, i).scale(&(sg(n - m) * cn(n - m) * binom(n, m)))));
            same(lhs, g1(n - 1, i - 1).scale(&(zu(n) * inv(i))))
        })
        .when(|p| p.i >= 1),
        IdentityCase::new("G09.gder2", "sum (-1)^(n-m) c^_{n-m} C(n,m) [m i]_x = (n/i) [n-1, i-1]_{x+1}", &[N, I], |p| {
            let (n, i) = (p.n, p.i);
            let lhs = sum_p((i..=n).map(|m| g1(m, i).scale(&(sg(n - m) * chn(n - m) * binom(n, m)))));
            same(lhs, plus_one(&g1(n - 1, i - 1)).scale(&(zu(n) * inv(i))))
        })
        .when(|p| p.i >= 1),
        IdentityCase::new("G09.number-recurrence", "c_n/n! = sum_{m<n} c_m/m! (-1)^(n+1-m)/(n+1-m)", &[N], |p| {
            let n = p.n;
            let rhs = sum_r((0..n).map(|m| cn(m) / factorial(m) * sg(n + 1 - m) * inv(n + 1 - m)));
            same(cn(n) / factorial(n), rhs)
        })
        .min_n(1),
        IdentityCase::new("G09.harmonic-half", "sum (-1)^(n-m)/(m+1) c_{n-m}/(n-m)! H_m = 1/(2n)", &[N], |p| {
            let n = p.n;
            let lhs = sum_r((0..=n).map(|m| sg(n - m) * inv(m + 1) * cn(n - m) / factorial(n - m) * hn(m)));
            same(lhs, inv(2 * n))
        })
        .min_n(1),
        IdentityCase::new("G09.zhao", "sum (-1)^(n-m) c_{n-m}/(n-m)! H_{m+1} = 1", &[N], |p| {
            let n = p.n;
            same(sum_r((0..=n).map(|m| sg(n - m) * cn(n - m) / factorial(n - m) * hn(m + 1))), z(1))
        }),
        IdentityCase::new("G09.second-number-recurrence", "c^_n/n! = (-1)^n + sum_{m<n} c^_m/m! (-1)^(n+1-m)/(n+1-m)", &[N], |p| {
            let n = p.n;
            let rhs = sg(n) + sum_r((0..n).map(|m| chn(m) / factorial(m) * sg(n + 1 - m) * inv(n + 1 - m)));
            same(chn(n) / factorial(n), rhs)
        })
        .min_n(1),
        IdentityCase::new("G09.second-harmonic-half", "sum (-1)^(n-m)/(m+1) c^_{n-m}/(n-m)! H_m = H_n/2", &[N], |p| {
            let n = p.n;
            let lhs = sum_r((0..=n).map(|m| sg(n - m) * inv(m + 1) * chn(n - m) / factorial(n - m) * hn(m)));
            same(lhs, hn(n) / z(2))
        }),
        IdentityCase::new("G09.second-harmonic-convolution", "sum (-1)^(n-m) c^_{n-m}/(n-m)! H_{m+1} = n+1", &[N], |p| {
            let n = p.n;
            same(sum_r((0..=n).map(|m| sg(n - m) * chn(n - m) / factorial(n - m) * hn(m + 1))), zu(n + 1))
        }),
    ]
}
