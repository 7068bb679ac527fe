//! Cauchy polynomials against generalized Stirling numbers, coefficient
//! laws, the Stirling-first-kind expansion and integration formulas.

use polycauchy::{cauchy_poly, power_sum_poly, Construction, RatPoly, Rational};

use super::util::*;
use crate::case::{all, same, IdentityCase};
use crate::grid::Dim::*;

fn integral(kind: polycauchy::CauchyKind, n: usize) -> Result<RatPoly, crate::Mismatch> {
    Ok(cauchy_poly(kind, n, 1, Construction::Integral)?)
}

/// r-Stirling numbers `[n k]_r` (first) or `{n k}_r` (second) from their
/// defining recurrences.
fn r_stirling(first: bool, n: usize, k: usize, r: usize) -> Rational {
    if n < r || k > n {
        return z(0);
    }
    let mut row: Vec<Rational> = (0..=n).map(|j| delta(j, r)).collect();
    for m in r + 1..=n {
        let mut next = vec![z(0); n + 1];
        for j in 1..=m {
            let stay = if first { zu(m - 1) } else { zu(j) };
            next[j] = stay * &row[j] + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

/// `sum_{i} (-1)^i C(i+m, m) [n, i+m] x^i`.
fn gsn1_reflected(n: usize, m: usize) -> RatPoly {
    sum_p((0..=n - m).map(|i| RatPoly::monomial(sg(i) * binom(i + m, m) * stirling1(n, i + m), i)))
}

/// Coefficients of `prod_{l=1}^n (t - x + l)` in `t`.
fn p_poly(n: usize, m: usize) -> RatPoly {
    sum_p((m..=n).map(|l| RatPoly::monomial(binom(l, m) * stirling1(n + 1, l + 1) * sg(l - m), l - m)))
}

fn inversion_sequence(m: usize) -> Rational {
    sg(m) * zu(m * m + 1) / zu(m + 2)
}

fn g01() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G01.first-from-gsn", "c_n(x) = sum (-1)^(n-m)/(m+1) [n m]_x", &[N], |p| {
            let rhs = sum_p((0..=p.n).map(|m| g1(p.n, m).scale(&(sg(p.n - m) * inv(m + 1)))));
            same(integral(FIRST, p.n)?, rhs)
        }),
        IdentityCase::new("G01.second-from-gsn", "c^_n(-x) = (-1)^n sum 1/(m+1) [n m]_x", &[N], |p| {
            let rhs = sum_p((0..=p.n).map(|m| g1(p.n, m).scale(&inv(m + 1)))).scale(&sg(p.n));
            same(neg(&integral(SECOND, p.n)?), rhs)
        }),
        IdentityCase::new(
            "G01.p-gf",
            "prod_{l=1}^n (t - x + l) = sum_m P_{n+1,m}(x) t^m",
            &[N, X],
            |p| {
                let lhs = (1..=p.n).fold(one(), |acc, l| acc * (x() + cst(zu(l) - &p.x)));
                let rhs = sum_p((0..=p.n).map(|m| RatPoly::monomial(ev(&p_poly(p.n, m), &p.x), m)));
                same(lhs, rhs)
            },
        ),
        IdentityCase::new("G01.p-shift", "P_{n+1,m}(x+1) = [n m]_{-x}", &[N], |p| {
            all((0..=p.n).map(|m| same(sh(&p_poly(p.n, m), &z(1)), neg(&g1(p.n, m)))))
        }),
        IdentityCase::new(
            "G01.r-values",
            "c_n(r) and c^_n(-r) through r-Stirling numbers of the first kind",
            &[N, R],
            |p| {
                let (n, r) = (p.n, p.r);
                let rs = |m: usize| r_stirling(true, n + r, m + r, r);
                let first = sum_r((0..=n).map(|m| sg(n - m) * inv(m + 1) * rs(m)));
                let second = sg(n) * sum_r((0..=n).map(|m| inv(m + 1) * rs(m)));
                all([same(ev(&c(n), &zu(r)), first), same(ev(&ch(n), &-zu(r)), second)])
            },
        ),
        IdentityCase::new("G01.r-stirling", "[n m]_r and {n m}_r are r-Stirling numbers", &[N, R], |p| {
            let (n, r) = (p.n, p.r);
            all((0..=n).flat_map(|m| {
                [
                    same(ev(&g1(n, m), &zu(r)), r_stirling(true, n + r, m + r, r)),
                    same(ev(&g2(n, m), &zu(r)), r_stirling(false, n + r, m + r, r)),
                ]
            }))
        }),
        IdentityCase::new("G01.numbers", "c_n and c^_n as sums over [n m]", &[N], |p| {
            let n = p.n;
            let first = sum_r((0..=n).map(|m| sg(n - m) * inv(m + 1) * stirling1(n, m)));
            let second = sg(n) * sum_r((0..=n).map(|m| inv(m + 1) * stirling1(n, m)));
            all([
                same(integral(FIRST, n)?.coeff(0), first),
                same(integral(SECOND, n)?.coeff(0), second),
            ])
        }),
        IdentityCase::new("G01.second-from-negated-gsn", "c^_n(x) = (-1)^n sum 1/(m+1) [n m]_{-x}", &[N], |p| {
            let rhs = sum_p((0..=p.n).map(|m| gsn1_reflected(p.n, m).scale(&inv(m + 1)))).scale(&sg(p.n));
            same(integral(SECOND, p.n)?, rhs)
        }),
        IdentityCase::new("G01.negated-gsn-expansion", "[n m]_{-x} = sum (-1)^i C(i+m,m) [n,i+m] x^i", &[N], |p| {
            all((0..=p.n).map(|m| same(neg(&g1(p.n, m)), gsn1_reflected(p.n, m))))
        }),
        IdentityCase::new("G01.one-minus-x", "c^_n(x) = sum (-1)^(n-m)/(m+1) [n m]_{1-x}", &[N], |p| {
            let rhs = sum_p((0..=p.n).map(|m| refl(&g1(p.n, m), &z(1)).scale(&(sg(p.n - m) * inv(m + 1)))));
            same(integral(SECOND, p.n)?, rhs)
        }),
        IdentityCase::new("G01.stirling1-sum", "c^_n = sum (-1)^(n-m)/(m+1) [n+1, m+1]", &[N], |p| {
            let rhs = sum_r((0..=p.n).map(|m| sg(p.n - m) * inv(m + 1) * stirling1(p.n + 1, m + 1)));
            same(chn(p.n), rhs)
        }),
        IdentityCase::new("G01.reflection", "c^_n(x) = c_n(1-x)", &[N], |p| {
            same(integral(SECOND, p.n)?, refl(&integral(FIRST, p.n)?, &z(1)))
        }),
        IdentityCase::new(
            "G01.stirling2-transform",
            "sum {n m}_x c_m(x) = 1/(n+1) and sum {n m}_x c^_m(-x) = (-1)^n/(n+1)",
            &[N],
            |p| {
                let n = p.n;
                let first = sum_p((0..=n).map(|m| &g2(n, m) * &c(m)));
                let second = sum_p((0..=n).map(|m| &g2(n, m) * &neg(&ch(m))));
                all([same(first, cst(inv(n + 1))), same(second, cst(sg(n) * inv(n + 1)))])
            },
        ),
        IdentityCase::new("G01.stirling2-transform-numbers", "sum {n m} c_m = 1/(n+1), sum {n m} c^_m = (-1)^n/(n+1)", &[N], |p| {
            let n = p.n;
            all([
                same(sum_r((0..=n).map(|m| stirling2(n, m) * cn(m))), inv(n + 1)),
                same(sum_r((0..=n).map(|m| stirling2(n, m) * chn(m))), sg(n) * inv(n + 1)),
            ])
        }),
        IdentityCase::new("G01.rep1", "[n m]_x = (n!/m!) d^m/dx^m C(x+n-1, n)", &[N], |p| {
            let n = p.n;
            let base = bin(&(zu(n) - z(1)), n);
            all((0..=n).map(|m| same(g1(n, m), base.derivative(m).scale(&(factorial(n) / factorial(m))))))
        }),
        IdentityCase::new("G01.gs22", "{n m}_x = (1/m!) sum (-1)^(m-l) C(m,l) (x+l)^n", &[N], |p| {
            let n = p.n;
            all((0..=n).map(|m| {
                let rhs = sum_p((0..=m).map(|l| lin_pow(&zu(l), n).scale(&(sg(m - l) * binom(m, l)))));
                same(g2(n, m), rhs.scale(&(z(1) / factorial(m))))
            }))
        }),
        IdentityCase::new("G01.orthogonality", "sum (-1)^(n-l) [n l]_x {l m}_x = sum (-1)^(n-l) {n l}_x [l m]_x = delta", &[N], |p| {
            let n = p.n;
            all((0..=n).flat_map(|m| {
                let a = sum_p((m..=n).map(|l| (&g1(n, l) * &g2(l, m)).scale(&sg(n - l))));
                let b = sum_p((m..=n).map(|l| (&g2(n, l) * &g1(l, m)).scale(&sg(n - l))));
                [same(a, cst(delta(n, m))), same(b, cst(delta(n, m)))]
            }))
        })
        .double(),
        IdentityCase::new("G01.inversion", "f_n = sum (-1)^(n-m) [n m]_x g_m iff g_n = sum {n m}_x f_m", &[N, X], |p| {
            let n = p.n;
            let g = |j: usize| sum_r((0..=j).map(|m| ev(&g2(j, m), &p.x) * inversion_sequence(m)));
            let back = sum_r((0..=n).map(|m| sg(n - m) * ev(&g1(n, m), &p.x) * g(m)));
            same(back, inversion_sequence(n))
        })
        .double(),
        IdentityCase::new("G01.x0-stirling", "[n m]_0 and {n m}_0 are ordinary Stirling numbers", &[N], |p| {
            let n = p.n;
            all((0..=n).flat_map(|m| {
                [same(g1(n, m).coeff(0), stirling1(n, m)), same(g2(n, m).coeff(0), stirling2(n, m))]
            }))
        }),
    ]
}

fn g02() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G02.coef1", "c_{n,i} = (-1)^(n+i) sum (-1)^m/(m-i+1) C(m,i) [n m]", &[N, I], |p| {
            let (n, i) = (p.n, p.i);
            let rhs = sg(n + i) * sum_r((i..=n).map(|m| sg(m) * inv(m - i + 1) * binom(m, i) * stirling1(n, m)));
            same(integral(FIRST, n)?.coeff(i), rhs)
        }),
        IdentityCase::new("G02.coef2", "c^_{n,i} = (-1)^(n+i) sum 1/(m-i+1) C(m,i) [n m]", &[N, I], |p| {
            let (n, i) = (p.n, p.i);
            let rhs = sg(n + i) * sum_r((i..=n).map(|m| inv(m - i + 1) * binom(m, i) * stirling1(n, m)));
            same(integral(SECOND, n)?.coeff(i), rhs)
        }),
        IdentityCase::new("G02.leading", "c_{n,n} = (-1)^n and c^_{n,n} = 1", &[N], |p| {
            all([same(c(p.n).coeff(p.n), sg(p.n)), same(ch(p.n).coeff(p.n), z(1))])
        }),
        IdentityCase::new("G02.subleading", "c_{n,n-1} = (-1)^n n(n-2)/2 and c^_{n,n-1} = -n^2/2", &[N], |p| {
            let n = zu(p.n);
            all([
                same(c(p.n).coeff(p.n - 1), sg(p.n) * &n * (&n - z(2)) / z(2)),
                same(ch(p.n).coeff(p.n - 1), -(&n * &n) / z(2)),
            ])
        })
        .min_n(1),
    ]
}

fn g03() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G03.exp1", "c_n(x) = c_n + (-1)^n n sum (1/m) [n-1, m-1] x^m", &[N], |p| {
            let n = p.n;
            let tail = sum_p((1..=n).map(|m| RatPoly::monomial(inv(m) * stirling1(n - 1, m - 1), m)));
            same(integral(FIRST, n)?, cst(cn(n)) + tail.scale(&(sg(n) * zu(n))))
        })
        .min_n(1),
        IdentityCase::new("G03.exp2", "c^_n(x) = c_n + (-1)^n n sum (-1)^m/m [n-1, m-1] (x-1)^m", &[N], |p| {
            let n = p.n;
            let tail = sum_p((1..=n).map(|m| lin_pow(&z(-1), m).scale(&(sg(m) * inv(m) * stirling1(n - 1, m - 1)))));
            same(integral(SECOND, n)?, cst(cn(n)) + tail.scale(&(sg(n) * zu(n))))
        })
        .min_n(1),
        IdentityCase::new("G03.exp3", "c_n = delta_{n,1} + (-1)^(n+1) n sum [n-1, m-1] B_m/m", &[N], |p| {
            let n = p.n;
            let s = sum_r((1..=n).map(|m| stirling1(n - 1, m - 1) * bn(m) * inv(m)));
            same(integral(FIRST, n)?.coeff(0), delta(n, 1) + sg(n + 1) * zu(n) * s)
        })
        .min_n(1),
        IdentityCase::new("G03.exp4", "c_{n,i} = (-1)^n (n/i) [n-1, i-1] for i >= 1", &[N, I], |p| {
            let (n, i) = (p.n, p.i);
            same(integral(FIRST, n)?.coeff(i), sg(n) * zu(n) * inv(i) * stirling1(n - 1, i - 1))
        })
        .min_n(1)
        .when(|p| p.i >= 1),
        IdentityCase::new(
            "G03.coef-identity",
            "sum (-1)^(m-i)/(m-i+1) C(m,i) [n m] = (n/i) [n-1, i-1]",
            &[N, I],
            |p| {
                let (n, i) = (p.n, p.i);
                let lhs = sum_r((i..=n).map(|m| sg(m - i) * inv(m - i + 1) * binom(m, i) * stirling1(n, m)));
                same(lhs, zu(n) * inv(i) * stirling1(n - 1, i - 1))
            },
        )
        .min_n(1)
        .when(|p| p.i >= 1),
        IdentityCase::new("G03.alternating-stirling", "sum_{m>=1} (-1)^m [n m] = 0", &[N], |p| {
            same(sum_r((1..=p.n).map(|m| sg(m) * stirling1(p.n, m))), z(0))
        })
        .min_n(2),
        IdentityCase::new("G03.ind1", "n! C(x+1, n+1) = delta_{n,0} + sum (-1)^(n-m) [n m] S_m(x)", &[N], |p| {
            let n = p.n;
            let rhs = cst(delta(n, 0)) + sum_p((0..=n).map(|m| power_sum_poly(m).scale(&(sg(n - m) * stirling1(n, m)))));
            same(bin(&z(1), n + 1).scale(&factorial(n)), rhs)
        }),
        IdentityCase::new(
            "G03.poly3",
            "c_n(s)/n = delta_{n,1} + sum (-1)^(n-m) [n-1, m-1] int_0^1 S_{m-1}(x-s-1) dx",
            &[N, X],
            |p| {
                let n = p.n;
                let s = &p.x;
                let rhs = delta(n, 1)
                    + sum_r((1..=n).map(|m| {
                        sg(n - m) * stirling1(n - 1, m - 1) * power_sum_poly(m - 1).shift(&(-s - z(1))).integrate_01()
                    }));
                same(ev(&integral(FIRST, n)?, s) * inv(n), rhs)
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G03.integral",
            "int c_n = int c^_n = c_n + (-1)^n n sum [n-1, m-1]/(m(m+1))",
            &[N],
            |p| {
                let n = p.n;
                let rhs = cn(n) + sg(n) * zu(n) * sum_r((1..=n).map(|m| stirling1(n - 1, m - 1) * inv(m * (m + 1))));
                all([
                    same(integral(FIRST, n)?.integrate_01(), rhs.clone()),
                    same(integral(SECOND, n)?.integrate_01(), rhs),
                ])
            },
        )
        .min_n(1),
        IdentityCase::new("G03.qi", "c_n = (-1)^(n+1) sum [n-1, m-1]/(m(m+1))", &[N], |p| {
            let n = p.n;
            same(cn(n), sg(n + 1) * sum_r((1..=n).map(|m| stirling1(n - 1, m - 1) * inv(m * (m + 1)))))
        })
        .min_n(1),
    ]
}

fn g04() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G04.lm11", "int_0^1 S_{n-1}(x+y-1) dx = (y^n - B_n(1))/n", &[N, Y], |p| {
            let n = p.n;
            let lhs = power_sum_poly(n - 1).shift(&(&p.y - z(1))).integrate_01();
            same(lhs, (pw(&p.y, n) - ev(&b(n), &z(1))) * inv(n))
        })
        .min_n(1),
        IdentityCase::new("G04.lm12", "int_0^1 S_{n-1}(-x+y-1) dx = ((y-1)^n - B_n(1))/n", &[N, Y], |p| {
            let n = p.n;
            let lhs = refl(&power_sum_poly(n - 1), &(&p.y - z(1))).integrate_01();
            same(lhs, (pw(&(&p.y - z(1)), n) - ev(&b(n), &z(1))) * inv(n))
        })
        .min_n(1),
        IdentityCase::new(
            "G04.bernoulli-integral",
            "int_x^y B_n(t) dt = (B_{n+1}(y) - B_{n+1}(x))/(n+1)",
            &[N, Y],
            |p| {
                let n = p.n;
                let anti = b(n).antiderivative();
                let lhs = cst(ev(&anti, &p.y)) - anti;
                let rhs = (cst(ev(&b(n + 1), &p.y)) - b(n + 1)).scale(&inv(n + 1));
                same(lhs, rhs)
            },
        ),
        IdentityCase::new("G04.difference", "B_n(x+1) - B_n(x) = n x^(n-1)", &[N], |p| {
            same(sh(&b(p.n), &z(1)) - b(p.n), xp(p.n - 1).scale(&zu(p.n)))
        })
        .min_n(1),
        IdentityCase::new("G04.bernoulli-at-one", "B_m(1) = (-1)^m B_m", &[N], |p| {
            same(ev(&b(p.n), &z(1)), sg(p.n) * bn(p.n))
        }),
        IdentityCase::new(
            "G04.defb",
            "S_{n-1}(x-1) = (B_n(x) - B_n(1))/n agrees with the power sums 1^(n-1) + ... + (x-1)^(n-1)",
            &[N],
            |p| {
                let n = p.n;
                let poly = (b(n) - cst(ev(&b(n), &z(1)))).scale(&inv(n));
                // degree n, so n+1 integer nodes pin it down
                all((1..=n + 1).map(|xv| {
                    let direct = sum_r((1..xv).map(|j| pw(&zu(j), n - 1)));
                    same(ev(&poly, &zu(xv)), direct)
                }))
            },
        )
        .min_n(1),
        IdentityCase::new("G04.int1", "int_0^1 c_n = int_0^1 c^_n = (1-n) c_n", &[N], |p| {
            let n = p.n;
            let rhs = (z(1) - zu(n)) * cn(n);
            all([
                same(integral(FIRST, n)?.integrate_01(), rhs.clone()),
                same(integral(SECOND, n)?.integrate_01(), rhs),
            ])
        }),
    ]
}

pub(super) fn cases() -> Vec<IdentityCase> {
    let mut v = g01();
    v.extend(g02());
    v.extend(g03());
    v.extend(g04());
    v
}
