//! Bernoulli polynomials written through Cauchy polynomials and the
//! generalized Stirling polynomials, and back.

use polycauchy::{central_u, Rational, RatPoly};

use super::util::*;
use crate::case::{all, same, IdentityCase};
use crate::grid::Dim::*;

/// `{n m}_y` at a point.
fn s2y(n: usize, m: usize, y: &Rational) -> Rational {
    ev(&g2(n, m), y)
}

fn s1y(n: usize, m: usize, y: &Rational) -> Rational {
    ev(&g1(n, m), y)
}

/// `sum_{m=1}^n w_m {n-1, m-1}_x` with polynomial weights.
fn against_s2(n: usize, w: impl Fn(usize) -> RatPoly) -> RatPoly {
    sum_p((1..=n).map(|m| g2(n - 1, m - 1) * w(m)))
}

fn bnp(n: usize) -> RatPoly {
    b(n)
}

/// Inner sum over `l` in the double-sum forms, `sum_{l=1}^m {m-1, l-1}_y f(l-1)`.
fn inner(m: usize, y: &Rational, f: impl Fn(usize) -> Rational) -> Rational {
    sum_r((1..=m).map(|l| s2y(m - 1, l - 1, y) * f(l - 1)))
}

fn g11() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G11.cauchy-via-bernoulli", "c_n = [n = 1] + (-1)^(n+1) n sum [n-1, m-1] B_m/m", &[N], |p| {
            let n = p.n;
            let s = sum_r((1..=n).map(|m| stirling1(n - 1, m - 1) * bn(m) * inv(m)));
            same(cn(n), delta(n, 1) + sg(n + 1) * zu(n) * s)
        })
        .min_n(1),
        IdentityCase::new("G11.central-second", "c^_{2n}(n) = -n sum u(n,m)/m B_{2m}", &[N], |p| {
            let n = p.n;
            let s = sum_r((1..=n).map(|m| central_u(n, m).unwrap() * inv(m) * bn(2 * m)));
            same(ev(&ch(2 * n), &zu(n)), -(zu(n) * s))
        })
        .min_n(1),
        IdentityCase::new("G11.bernoulli-first", "-B_n(x)/n = sum c_m(x)/m {n-1, m-1}_x", &[N], |p| {
            let n = p.n;
            same(bnp(n).scale(&-inv(n)), against_s2(n, |m| c(m).scale(&inv(m))))
        })
        .min_n(1),
        IdentityCase::new("G11.bernoulli-second", "((-1)^n - B_n(x))/n = sum c^_m(-x)/m {n-1, m-1}_x", &[N], |p| {
            let n = p.n;
            let lhs = (cst(sg(n)) - bnp(n)).scale(&inv(n));
            same(lhs, against_s2(n, |m| neg(&ch(m)).scale(&inv(m))))
        })
        .min_n(1),
        IdentityCase::new("G11.bernoulli-first-at-one", "-B_n/n = (-1)^n sum c^_m/m {n m}", &[N], |p| {
            let n = p.n;
            let s = sum_r((1..=n).map(|m| chn(m) * inv(m) * stirling2(n, m)));
            same(-(bn(n) * inv(n)), sg(n) * s)
        })
        .min_n(1),
        IdentityCase::new("G11.bernoulli-first-at-zero", "-B_n/n = sum c_m/m {n-1, m-1}", &[N], |p| {
            let n = p.n;
            let s = sum_r((1..=n).map(|m| cn(m) * inv(m) * stirling2(n - 1, m - 1)));
            same(-(bn(n) * inv(n)), s)
        })
        .min_n(1),
        IdentityCase::new("G11.inv2", "-c_n(x)/n = sum (-1)^(n-m)/m [n-1, m-1]_x B_m(x)", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((1..=n).map(|m| g1(n - 1, m - 1).scale(&(sg(n - m) * inv(m))) * b(m)));
            same(c(n).scale(&-inv(n)), rhs)
        })
        .min_n(1),
        IdentityCase::new("G11.inv3", "-c^_n(-x)/n = sum (-1)^n/m [n-1, m-1]_x ((-1)^m B_m(x) - 1)", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((1..=n).map(|m| g1(n - 1, m - 1).scale(&(sg(n) * inv(m))) * (b(m).scale(&sg(m)) - one())));
            same(neg(&ch(n)).scale(&-inv(n)), rhs)
        })
        .min_n(1),
        IdentityCase::new(
            "G11.inv3-rewritten",
            "-c^_n(-x)/n = c^_{n-1}(-x) + sum (-1)^(n-m)/m [n-1, m-1]_x B_m(x)",
            &[N],
            |p| {
                let n = p.n;
                let rhs = sum_p((1..=n).map(|m| g1(n - 1, m - 1).scale(&(sg(n - m) * inv(m))) * b(m)));
                same(neg(&ch(n)).scale(&-inv(n)), neg(&ch(n - 1)) + rhs)
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G11.exp5",
            "(-1)^(n+1) c^_n/n = sum [n m] B_m/m and (-1)^(n+1) c_n/n = sum (-1)^m [n-1, m-1] B_m/m",
            &[N],
            |p| {
                let n = p.n;
                let s1 = sum_r((1..=n).map(|m| stirling1(n, m) * bn(m) * inv(m)));
                let s2 = sum_r((1..=n).map(|m| sg(m) * stirling1(n - 1, m - 1) * bn(m) * inv(m)));
                all([same(sg(n + 1) * chn(n) * inv(n), s1), same(sg(n + 1) * cn(n) * inv(n), s2)])
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G11.sign-symmetric-sum",
            "sum [n-1, m-1] B_m/m = sum (-1)^m [n-1, m-1] B_m/m",
            &[N],
            |p| {
                let n = p.n;
                let plain = sum_r((1..=n).map(|m| stirling1(n - 1, m - 1) * bn(m) * inv(m)));
                let signed = sum_r((1..=n).map(|m| sg(m) * stirling1(n - 1, m - 1) * bn(m) * inv(m)));
                same(plain, signed)
            },
        )
        .min_n(2),
        IdentityCase::new("G11.odd-vanishing", "B_{2m+1} = 0 for m >= 1", &[N], |p| same(bn(2 * p.n + 1), z(0))).min_n(1),
    ]
}

fn g12() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G12.bernoulli-from-first", "B_n(x) = x^n - n sum c_m/m {n-1, m-1}_x", &[N], |p| {
            let n = p.n;
            let s = against_s2(n, |m| cst(cn(m) * inv(m)));
            same(b(n), xp(n) - s.scale(&zu(n)))
        })
        .min_n(1),
        IdentityCase::new("G12.bernoulli-from-second", "B_n(x) = (x-1)^n - n sum c^_m/m {n-1, m-1}_x", &[N], |p| {
            let n = p.n;
            let s = against_s2(n, |m| cst(chn(m) * inv(m)));
            same(b(n), lin_pow(&z(-1), n) - s.scale(&zu(n)))
        })
        .min_n(1),
        IdentityCase::new("G12.numbers-first", "B_n = (-1)^n (1 - n sum c_m/m {n m})", &[N], |p| {
            let n = p.n;
            let s = sum_r((1..=n).map(|m| cn(m) * inv(m) * stirling2(n, m)));
            same(bn(n), sg(n) * (z(1) - zu(n) * s))
        })
        .min_n(1),
        IdentityCase::new("G12.numbers-second", "B_n = (-1)^n - n sum c^_m/m {n-1, m-1}", &[N], |p| {
            let n = p.n;
            let s = sum_r((1..=n).map(|m| chn(m) * inv(m) * stirling2(n - 1, m - 1)));
            same(bn(n), sg(n) - zu(n) * s)
        })
        .min_n(1),
        IdentityCase::new("G12.difference", "sum (c_m - c_m(x))/m {n-1, m-1}_x = x^n/n", &[N], |p| {
            let n = p.n;
            let s = against_s2(n, |m| (cst(cn(m)) - c(m)).scale(&inv(m)));
            same(s, xp(n).scale(&inv(n)))
        })
        .min_n(1),
        IdentityCase::new("G12.difference-numbers", "sum (c_m - c^_m)/m {n m} = 1/n", &[N], |p| {
            let n = p.n;
            same(sum_r((1..=n).map(|m| (cn(m) - chn(m)) * inv(m) * stirling2(n, m))), inv(n))
        })
        .min_n(1),
        IdentityCase::new("G12.first-minus-second", "c_m - c^_m = m c^_{m-1}", &[N], |p| {
            let m = p.n;
            same(cn(m) - chn(m), zu(m) * chn(m - 1))
        })
        .min_n(1),
        IdentityCase::new("G12.stirling2-inverted", "sum {n+1, m+1} c^_m = 1/(n+1)", &[N], |p| {
            let n = p.n;
            same(sum_r((0..=n).map(|m| stirling2(n + 1, m + 1) * chn(m))), inv(n + 1))
        }),
    ]
}

fn g13() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G13.bernoulli-via-stirling2", "B_n(x) = sum (-1)^m m!/(m+1) {n m}_x", &[N], |p| {
            let n = p.n;
            same(b(n), sum_p((0..=n).map(|m| g2(n, m).scale(&(sg(m) * factorial(m) * inv(m + 1))))))
        }),
        IdentityCase::new(
            "G13.bernoulli-via-stirling2-inverted",
            "1/(m+1) = (1/m!) sum (-1)^l [m l]_y B_l(y)",
            &[N],
            |p| {
                let m = p.n;
                let rhs = sum_p((0..=m).map(|l| g1(m, l) * b(l).scale(&sg(l))));
                same(rhs.scale(&factorial(m).recip()), cst(inv(m + 1)))
            },
        ),
        IdentityCase::new("G13.double-sum-1", "B_n(x) = sum sum (-1)^m m! {n m}_x {m l}_y c_l(y)", &[N, Y], |p| {
            let (n, y) = (p.n, &p.y);
            let rhs = sum_p((0..=n).map(|m| {
                let w = sum_r((0..=m).map(|l| s2y(m, l, y) * ev(&c(l), y)));
                g2(n, m).scale(&(sg(m) * factorial(m) * w))
            }));
            same(b(n), rhs)
        })
        .double(),
        IdentityCase::new("G13.double-sum-2", "B_n(x) = sum sum m! {n m}_x {m l}_y c^_l(-y)", &[N, Y], |p| {
            let (n, y) = (p.n, &p.y);
            let rhs = sum_p((0..=n).map(|m| {
                let w = sum_r((0..=m).map(|l| s2y(m, l, y) * ev(&ch(l), &-y.clone())));
                g2(n, m).scale(&(factorial(m) * w))
            }));
            same(b(n), rhs)
        })
        .double(),
        IdentityCase::new("G13.double-sum-3", "c_n(x) = sum sum (-1)^(n-m+l)/m! [n m]_x [m l]_y B_l(y)", &[N, Y], |p| {
            let (n, y) = (p.n, &p.y);
            let rhs = sum_p((0..=n).map(|m| {
                let w = sum_r((0..=m).map(|l| sg(l) * s1y(m, l, y) * ev(&b(l), y)));
                g1(n, m).scale(&(sg(n - m) / factorial(m) * w))
            }));
            same(c(n), rhs)
        })
        .double(),
        IdentityCase::new("G13.double-sum-4", "c^_n(-x) = sum sum (-1)^(n-l)/m! [n m]_x [m l]_y B_l(y)", &[N, Y], |p| {
            let (n, y) = (p.n, &p.y);
            let rhs = sum_p((0..=n).map(|m| {
                let w = sum_r((0..=m).map(|l| sg(l) * s1y(m, l, y) * ev(&b(l), y)));
                g1(n, m).scale(&(sg(n) / factorial(m) * w))
            }));
            same(neg(&ch(n)), rhs)
        })
        .double(),
        IdentityCase::new(
            "G13.nested-1",
            "-B_n(x)/n = sum sum {n-1, m-1}_x {m-1, l-1}_y c_m(x) c_{l-1}(y)",
            &[N, Y],
            |p| {
                let (n, y) = (p.n, &p.y);
                let rhs = against_s2(n, |m| c(m).scale(&inner(m, y, |j| ev(&c(j), y))));
                same(b(n).scale(&-inv(n)), rhs)
            },
        )
        .double()
        .min_n(1),
        IdentityCase::new(
            "G13.nested-2",
            "B_n(x)/n = sum sum (-1)^m {n-1, m-1}_x {m-1, l-1}_y c_m(x) c^_{l-1}(-y)",
            &[N, Y],
            |p| {
                let (n, y) = (p.n, &p.y);
                let rhs = against_s2(n, |m| c(m).scale(&(sg(m) * inner(m, y, |j| ev(&ch(j), &-y.clone())))));
                same(b(n).scale(&inv(n)), rhs)
            },
        )
        .double()
        .min_n(1),
        IdentityCase::new(
            "G13.nested-3",
            "((-1)^n - B_n(x))/n = sum sum {n-1, m-1}_x {m-1, l-1}_y c^_m(-x) c_{l-1}(y)",
            &[N, Y],
            |p| {
                let (n, y) = (p.n, &p.y);
                let rhs = against_s2(n, |m| neg(&ch(m)).scale(&inner(m, y, |j| ev(&c(j), y))));
                same((cst(sg(n)) - b(n)).scale(&inv(n)), rhs)
            },
        )
        .double()
        .min_n(1),
        IdentityCase::new(
            "G13.nested-4",
            "(B_n(x) - (-1)^n)/n = sum sum (-1)^m {n-1, m-1}_x {m-1, l-1}_y c^_m(-x) c^_{l-1}(-y)",
            &[N, Y],
            |p| {
                let (n, y) = (p.n, &p.y);
                let rhs = against_s2(n, |m| neg(&ch(m)).scale(&(sg(m) * inner(m, y, |j| ev(&ch(j), &-y.clone())))));
                same((b(n) - cst(sg(n))).scale(&inv(n)), rhs)
            },
        )
        .double()
        .min_n(1),
        IdentityCase::new(
            "G13.nested-5",
            "B_n(x) = x^n - n sum sum {n-1, m-1}_x {m-1, l-1}_y c_m c_{l-1}(y)",
            &[N, Y],
            |p| {
                let (n, y) = (p.n, &p.y);
                let s = against_s2(n, |m| cst(cn(m) * inner(m, y, |j| ev(&c(j), y))));
                same(b(n), xp(n) - s.scale(&zu(n)))
            },
        )
        .double()
        .min_n(1),
        IdentityCase::new(
            "G13.nested-6",
            "B_n(x) = x^n + n sum sum (-1)^m {n-1, m-1}_x {m-1, l-1}_y c_m c^_{l-1}(-y)",
            &[N, Y],
            |p| {
                let (n, y) = (p.n, &p.y);
                let s = against_s2(n, |m| cst(sg(m) * cn(m) * inner(m, y, |j| ev(&ch(j), &-y.clone()))));
                same(b(n), xp(n) + s.scale(&zu(n)))
            },
        )
        .double()
        .min_n(1),
        IdentityCase::new(
            "G13.nested-7",
            "B_n(x) = (x-1)^n - n sum sum {n-1, m-1}_x {m-1, l-1}_y c^_m c_{l-1}(y)",
            &[N, Y],
            |p| {
                let (n, y) = (p.n, &p.y);
                let s = against_s2(n, |m| cst(chn(m) * inner(m, y, |j| ev(&c(j), y))));
                same(b(n), lin_pow(&z(-1), n) - s.scale(&zu(n)))
            },
        )
        .double()
        .min_n(1),
        IdentityCase::new(
            "G13.nested-8",
            "B_n(x) = (x-1)^n + n sum sum (-1)^m {n-1, m-1}_x {m-1, l-1}_y c^_m c^_{l-1}(-y)",
            &[N, Y],
            |p| {
                let (n, y) = (p.n, &p.y);
                let s = against_s2(n, |m| cst(sg(m) * chn(m) * inner(m, y, |j| ev(&ch(j), &-y.clone()))));
                same(b(n), lin_pow(&z(-1), n) + s.scale(&zu(n)))
            },
        )
        .double()
        .min_n(1),
    ]
}

pub(super) fn cases() -> Vec<IdentityCase> {
    let mut v = g11();
    v.extend(g12());
    v.extend(g13());
    v
}
