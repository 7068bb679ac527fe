//! Hyperharmonic polynomials against Cauchy polynomials.

use polycauchy::series::gf_hyperharmonic;
use polycauchy::{hyperharmonic_poly, RatPoly};

use super::util::*;
use crate::case::{all, same, IdentityCase};
use crate::grid::Dim::*;

fn hh(n: usize) -> RatPoly {
    hyperharmonic_poly(n)
}

/// `sum_m (-1)^m p_m(x)/m! * w_{n-m}(x)` for a Cauchy family `p`.
fn convolve(n: usize, p: fn(usize) -> RatPoly, w: impl Fn(usize) -> RatPoly) -> RatPoly {
    sum_p((0..=n).map(|m| p(m).scale(&(sg(m) / factorial(m))) * w(n - m)))
}

/// Inner Stirling-Bernoulli sum `sum_{i=1}^m [m+1, i+1] i B_{i-1}(x)`.
fn stirling_bernoulli(m: usize) -> RatPoly {
    sum_p((1..=m).map(|i| b(i - 1).scale(&(stirling1(m + 1, i + 1) * zu(i)))))
}

pub(super) fn cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G10.rep2", "H_n^(x) = sum_t C(x+n-t-1, n-t)/t matches -log(1-t)/(1-t)^x", &[N], |p| {
            same(hh(p.n), gf_hyperharmonic(p.n.max(1)).coeff(p.n).clone())
        }),
        IdentityCase::new("G10.special-orders", "H_n^(0) = 1/n and H_n^(1) = H_n", &[N], |p| {
            let n = p.n;
            all([same(ev(&hh(n), &z(0)), inv(n)), same(ev(&hh(n), &z(1)), polycauchy::harmonic_number(n))])
        })
        .min_n(1),
        IdentityCase::new("G10.hyp1", "sum (-1)^m c_m(x)/m! H_{n+1-m}^(y) = C(x+y+n-1, n)", &[N, Y], |p| {
            let n = p.n;
            let lhs = convolve(n, c, |j| cst(ev(&hh(j + 1), &p.y)));
            same(lhs, bin(&(&p.y + zu(n) - z(1)), n))
        }),
        IdentityCase::new("G10.hyp2", "sum (-1)^m c^_m(x)/m! H_{n+1-m}^(y) = C(-x+y+n, n)", &[N, Y], |p| {
            let n = p.n;
            let lhs = convolve(n, ch, |j| cst(ev(&hh(j + 1), &p.y)));
            same(lhs, bin_neg(&(&p.y + zu(n)), n))
        }),
        IdentityCase::new("G10.hyp3", "sum (-1)^m c_m(x)/m! H_{n+1-m}^(-x) = [n = 0]", &[N], |p| {
            let n = p.n;
            same(convolve(n, c, |j| neg(&hh(j + 1))), cst(delta(n, 0)))
        }),
        IdentityCase::new("G10.hyp4", "sum (-1)^m c^_m(x)/m! H_{n+1-m}^(x) = 1", &[N], |p| {
            same(convolve(p.n, ch, |j| hh(j + 1)), one())
        }),
        IdentityCase::new(
            "G10.conec1",
            "c_n(x)/n! = sum_{m<n} c_m(x)/m! sum_t (-1)^(n+1-m-t)/(n+1-m-t) C(x, t)",
            &[N],
            |p| {
                let n = p.n;
                let rhs = sum_p((0..n).map(|m| {
                    let inner = sum_p((0..=n - m).map(|t| bin(&z(0), t).scale(&(sg(n + 1 - m - t) * inv(n + 1 - m - t)))));
                    c(m).scale(&factorial(m).recip()) * inner
                }));
                same(c(n).scale(&factorial(n).recip()), rhs)
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G10.conec2",
            "c^_n(x)/n! = (-1)^n + sum_{m<n} c^_m(x)/m! sum_t (-1)^(n+1-m)/(n+1-m-t) C(x+t-1, t)",
            &[N],
            |p| {
                let n = p.n;
                let rhs = sum_p((0..n).map(|m| {
                    let inner = sum_p((0..=n - m).map(|t| bin(&(zu(t) - z(1)), t).scale(&(sg(n + 1 - m) * inv(n + 1 - m - t)))));
                    ch(m).scale(&factorial(m).recip()) * inner
                }));
                same(ch(n).scale(&factorial(n).recip()), cst(sg(n)) + rhs)
            },
        )
        .min_n(1),
        IdentityCase::new("G10.order-minus-one", "H_1^(-1) = 1 and H_{n+1}^(-1) = -1/(n(n+1))", &[N], |p| {
            let n = p.n;
            let expected = if n == 0 { z(1) } else { -(inv(n) * inv(n + 1)) };
            same(ev(&hh(n + 1), &z(-1)), expected)
        }),
        IdentityCase::new(
            "G10.y-minus-one-first",
            "c_n(x)/n! = (-1)^n C(x+n-2, n) + sum_{m<n} c_m(x)/m! (-1)^(n-m)/((n-m)(n+1-m))",
            &[N],
            |p| {
                let n = p.n;
                let rhs = sum_p((0..n).map(|m| c(m).scale(&(sg(n - m) / factorial(m) * inv(n - m) * inv(n + 1 - m)))));
                same(c(n).scale(&factorial(n).recip()), bin(&(zu(n) - z(2)), n).scale(&sg(n)) + rhs)
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G10.hyp5",
            "c^_n(x)/n! = C(x, n) + sum_{m<n} c^_m(x)/m! (-1)^(n-m)/((n-m)(n+1-m))",
            &[N],
            |p| {
                let n = p.n;
                let rhs = sum_p((0..n).map(|m| ch(m).scale(&(sg(n - m) / factorial(m) * inv(n - m) * inv(n + 1 - m)))));
                same(ch(n).scale(&factorial(n).recip()), bin(&z(0), n) + rhs)
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G10.hyp5-numbers",
            "c_n/n! = [n = 1] + sum_{m<n} c_m/m! (-1)^(n-m)/((n-m)(n+1-m))",
            &[N],
            |p| {
                let n = p.n;
                let rhs = sum_r((0..n).map(|m| cn(m) / factorial(m) * sg(n - m) * inv(n - m) * inv(n + 1 - m)));
                same(cn(n) / factorial(n), delta(n, 1) + rhs)
            },
        )
        .min_n(1),
        IdentityCase::new("G10.hyp6", "c_n(x)/n! = sum (-1)^m c^_m(x+n)/m!", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((0..=n).map(|m| sh(&ch(m), &zu(n)).scale(&(sg(m) / factorial(m)))));
            same(c(n).scale(&factorial(n).recip()), rhs)
        }),
        IdentityCase::new("G10.hyp7", "c^_n(x)/n! = sum (-1)^m c_m(x-n)/m!", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((0..=n).map(|m| sh(&c(m), &-zu(n)).scale(&(sg(m) / factorial(m)))));
            same(ch(n).scale(&factorial(n).recip()), rhs)
        }),
        IdentityCase::new("G10.integral-over-order", "int_0^1 C(-x+y+n, n) dy = c_n(x-n)/n!", &[N, X], |p| {
            let n = p.n;
            let lhs = bin(&(zu(n) - &p.x), n).integrate_01();
            same(lhs, ev(&c(n), &(&p.x - zu(n))) / factorial(n))
        }),
        IdentityCase::new("G10.order-derivative", "H_{j+1}^(y) = d/dy C(y+j, j+1)", &[N], |p| {
            let j = p.n;
            same(hh(j + 1), bin(&zu(j), j + 1).derivative(1))
        }),
        IdentityCase::new(
            "G10.alternating-sums",
            "c_n(2) = (-1)^n n! sum (-1)^m c^_m/m! and c^_n = (-1)^n n! sum (-1)^m c_m/m!",
            &[N],
            |p| {
                let n = p.n;
                let s2 = sum_r((0..=n).map(|m| sg(m) * chn(m) / factorial(m)));
                let s1 = sum_r((0..=n).map(|m| sg(m) * cn(m) / factorial(m)));
                all([
                    same(ev(&c(n), &z(2)), sg(n) * factorial(n) * s2),
                    same(chn(n), sg(n) * factorial(n) * s1),
                ])
            },
        ),
        IdentityCase::new("G10.reflected-values", "c_n(-n) = (-1)^n c_n(2) and c^_n(n) = (-1)^n c^_n", &[N], |p| {
            let n = p.n;
            all([
                same(ev(&c(n), &-zu(n)), sg(n) * ev(&c(n), &z(2))),
                same(ev(&ch(n), &zu(n)), sg(n) * chn(n)),
            ])
        }),
        IdentityCase::new(
            "G10.bernoulli-first",
            "H_n^(x) = (1/n!) sum (-1)^(n-m) C(n,m) c_{n-m} sum_i [m+1, i+1] i B_{i-1}(x)",
            &[N],
            |p| {
                let n = p.n;
                let rhs = sum_p((1..=n).map(|m| stirling_bernoulli(m).scale(&(sg(n - m) * binom(n, m) * cn(n - m)))));
                same(hh(n), rhs.scale(&factorial(n).recip()))
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G10.bernoulli-second",
            "H_n^(x+1) = (1/n!) sum (-1)^(n-m) C(n,m) c^_{n-m} sum_i [m+1, i+1] i B_{i-1}(x)",
            &[N],
            |p| {
                let n = p.n;
                let rhs = sum_p((1..=n).map(|m| stirling_bernoulli(m).scale(&(sg(n - m) * binom(n, m) * chn(n - m)))));
                same(sh(&hh(n), &z(1)), rhs.scale(&factorial(n).recip()))
            },
        )
        .min_n(1),
    ]
}
