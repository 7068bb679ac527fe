//! Cauchy polynomials against binomial coefficients, the one-step and
//! n-step recurrences, central factorial numbers and r-Whitney numbers.

use polycauchy::cauchy::{recurrence_step_with_sign, RecurrenceSign};
use polycauchy::stirling::{a_number, whitney, whitney_by_stirling};
use polycauchy::{
    bernoulli_poly, cauchy_poly, central_u, euler_poly, power_sum_poly, Construction, RatPoly, Rational,
    StirlingKind,
};

use super::util::*;
use crate::case::{all, same, Check, IdentityCase, Mismatch};
use crate::grid::{Dim::*, Point};

fn integral(kind: polycauchy::CauchyKind, n: usize, k: usize) -> Result<RatPoly, Mismatch> {
    Ok(cauchy_poly(kind, n, k, Construction::Integral)?)
}

/// `A_x(n, m)`, zero outside `0..=n`.
fn a(n: usize, m: i64) -> RatPoly {
    if m < 0 || m as usize > n {
        return RatPoly::new(vec![]);
    }
    a_number(n, m as usize).expect("index in range")
}

fn u(n: usize, m: usize) -> Rational {
    central_u(n, m).expect("index in range")
}

fn half_index(p: &Point) -> bool {
    (1..=6).contains(&p.n)
}

fn g05() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G05.chen1", "c_n(x) = (-1)^n n! sum c^_m/m! C(x+n-1, n-m)", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((0..=n).map(|m| bin(&(zu(n) - z(1)), n - m).scale(&(chn(m) / factorial(m)))));
            same(integral(FIRST, n, 1)?, rhs.scale(&(sg(n) * factorial(n))))
        }),
        IdentityCase::new("G05.chen2", "c^_n(x) = n! sum (-1)^m c_m/m! C(x-m, n-m)", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((0..=n).map(|m| bin(&-zu(m), n - m).scale(&(sg(m) * cn(m) / factorial(m)))));
            same(integral(SECOND, n, 1)?, rhs.scale(&factorial(n)))
        }),
        IdentityCase::new(
            "G05.a-summation",
            "sum_m C(m,k) [n m] x^(m-k) = sum_m (-1)^(m-k) [m k] A_x(n,m)",
            &[N],
            |p| {
                let n = p.n;
                all((0..=n).map(|k| {
                    let lhs = sum_p((k..=n).map(|m| RatPoly::monomial(binom(m, k) * stirling1(n, m), m - k)));
                    let rhs = sum_p((k..=n).map(|m| a(n, m as i64).scale(&(sg(m - k) * stirling1(m, k)))));
                    same(lhs, rhs)
                }))
            },
        ),
        IdentityCase::new("G05.alpha1", "[n k]_x = n! sum (-1)^(m-k)/m! [m k] C(x+n-1, n-m)", &[N], |p| {
            let n = p.n;
            all((0..=n).map(|k| {
                let rhs = sum_p((k..=n).map(|m| {
                    bin(&(zu(n) - z(1)), n - m).scale(&(sg(m - k) * stirling1(m, k) / factorial(m)))
                }));
                same(g1(n, k), rhs.scale(&factorial(n)))
            }))
        }),
        IdentityCase::probe(
            "G05.alpha2",
            "[n k]_x = sum C(n,m) [m k] C(x+n-m-1, n-m), as printed and with the factor (n-m)!",
            &[N],
            &["as printed", "with (n-m)!"],
            |p| {
                let n = p.n;
                let variant = |with_factorial: bool| {
                    all((0..=n).map(|k| {
                        let rhs = sum_p((k..=n).map(|m| {
                            let f = if with_factorial { factorial(n - m) } else { z(1) };
                            bin(&(zu(n - m) - z(1)), n - m).scale(&(f * binom(n, m) * stirling1(m, k)))
                        }));
                        same(g1(n, k), rhs)
                    }))
                };
                vec![variant(false), variant(true)]
            },
        ),
        IdentityCase::new("G05.x0-1", "c^_n = (-1)^n n! sum C(n,m) c^_m/m!", &[N], |p| {
            let n = p.n;
            let rhs = sum_r((0..=n).map(|m| binom(n, m) * chn(m) / factorial(m)));
            same(chn(n), sg(n) * factorial(n) * rhs)
        }),
        IdentityCase::new("G05.x0-2", "c_n = (-1)^n n! sum_{m>=1} C(n-1,m-1) c^_m/m!", &[N], |p| {
            let n = p.n;
            let rhs = sum_r((1..=n).map(|m| binom(n - 1, m - 1) * chn(m) / factorial(m)));
            same(cn(n), sg(n) * factorial(n) * rhs)
        })
        .min_n(1),
        IdentityCase::new("G05.x0-3", "c^_n = (-1)^n n! sum_{m>=1} C(n-1,m-1) c_m/m!", &[N], |p| {
            let n = p.n;
            let rhs = sum_r((1..=n).map(|m| binom(n - 1, m - 1) * cn(m) / factorial(m)));
            same(chn(n), sg(n) * factorial(n) * rhs)
        })
        .min_n(1),
        IdentityCase::new("G05.x0-4", "c_n = (-1)^n n! sum_{m>=2} C(n-2,m-2) c_m/m!", &[N], |p| {
            let n = p.n;
            let rhs = sum_r((2..=n).map(|m| binom(n - 2, m - 2) * cn(m) / factorial(m)));
            same(cn(n), sg(n) * factorial(n) * rhs)
        })
        .min_n(2),
        IdentityCase::new("G05.symm1", "c_n(x) = (-1)^n n! sum (-1)^m c_m/m! C(x+n-m-1, n-m)", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((0..=n).map(|m| {
                bin(&(zu(n - m) - z(1)), n - m).scale(&(sg(m) * cn(m) / factorial(m)))
            }));
            same(integral(FIRST, n, 1)?, rhs.scale(&(sg(n) * factorial(n))))
        }),
        IdentityCase::new("G05.symm2", "c^_n(x) = n! sum c^_m/m! C(x, n-m)", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((0..=n).map(|m| bin(&z(0), n - m).scale(&(chn(m) / factorial(m)))));
            same(integral(SECOND, n, 1)?, rhs.scale(&factorial(n)))
        }),
        IdentityCase::new(
            "G05.symm-x1",
            "c^_n = (-1)^n n! sum (-1)^m c_m/m! and c_n = c^_n + n c^_{n-1}",
            &[N],
            |p| {
                let n = p.n;
                let first = sg(n) * factorial(n) * sum_r((0..=n).map(|m| sg(m) * cn(m) / factorial(m)));
                let mut checks = vec![same(chn(n), first)];
                if n >= 1 {
                    checks.push(same(cn(n), chn(n) + zu(n) * chn(n - 1)));
                }
                all(checks)
            },
        ),
        IdentityCase::new(
            "G05.symm2-integral",
            "int c^_n = n! sum c^_m/m! int C(x, n-m) = sum C(n,m) c^_m c_{n-m}",
            &[N],
            |p| {
                let n = p.n;
                let mid = factorial(n)
                    * sum_r((0..=n).map(|m| chn(m) / factorial(m) * bin(&z(0), n - m).integrate_01()));
                let right = sum_r((0..=n).map(|m| binom(n, m) * chn(m) * cn(n - m)));
                all([same(ch(n).integrate_01(), mid.clone()), same(mid, right)])
            },
        ),
        IdentityCase::new(
            "G05.convolution",
            "sum C(n,m) c^_m c_{n-m} = sum C(n,m) c_m c^_{n-m} = (1-n) c_n",
            &[N],
            |p| {
                let n = p.n;
                let a1 = sum_r((0..=n).map(|m| binom(n, m) * chn(m) * cn(n - m)));
                let a2 = sum_r((0..=n).map(|m| binom(n, m) * cn(m) * chn(n - m)));
                all([same(a1.clone(), a2), same(a1, (z(1) - zu(n)) * cn(n))])
            },
        ),
        IdentityCase::new("G05.c2-triple", "three expressions for c_n(2)", &[N], |p| {
            let n = p.n;
            let lead = sg(n) * factorial(n);
            let v1 = &lead * sum_r((0..=n).map(|m| sg(m) * chn(m) / factorial(m)));
            let v2 = &lead * sum_r((0..=n).map(|m| binom(n + 1, m + 1) * chn(m) / factorial(m)));
            let v3 = &lead * sum_r((0..=n).map(|m| binom(n, m) * cn(m) / factorial(m)));
            let c2 = ev(&c(n), &z(2));
            all([same(c2.clone(), v1), same(c2.clone(), v2), same(c2, v3)])
        }),
    ]
}

fn chen4_rhs(n: usize, k: usize, variant: RecurrenceSign) -> RatPoly {
    let lin = x() - cst(zu(n));
    let lin = match variant {
        RecurrenceSign::Plus => lin,
        RecurrenceSign::Minus => -lin,
    };
    let s = sum_p((0..=n).map(|m| {
        bin(&(-zu(m) - z(1)), n - m).scale(&(sg(m) * polycauchy::cauchy::number(FIRST, m + 1, k) / factorial(m)))
    }));
    lin * polycauchy::cauchy(SECOND, n, k) - s.scale(&factorial(n))
}

fn sign_probe(p: &Point) -> Vec<Check> {
    let target = match integral(SECOND, p.n + 1, p.k) {
        Ok(t) => t,
        Err(m) => return vec![Err(m.clone()), Err(m)],
    };
    [RecurrenceSign::Plus, RecurrenceSign::Minus]
        .into_iter()
        .map(|v| {
            let lib = recurrence_step_with_sign(SECOND, p.n, p.k, v)?;
            all([same(chen4_rhs(p.n, p.k, v), lib.clone()), same(lib, target.clone())])
        })
        .collect()
}

fn g06() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "G06.chen3",
            "c_{n+1}(x) = -(n+x) c_n(x) + (-1)^(n+1) n! sum c^_{m+1}/m! C(x+n, n-m)",
            &[N],
            |p| {
                let n = p.n;
                let s = sum_p((0..=n).map(|m| bin(&zu(n), n - m).scale(&(chn(m + 1) / factorial(m)))));
                let rhs = -(x() + cst(zu(n))) * c(n) + s.scale(&(sg(n + 1) * factorial(n)));
                same(integral(FIRST, n + 1, 1)?, rhs)
            },
        ),
        IdentityCase::new(
            "G06.chen4",
            "c^_{n+1}(x) = (x-n) c^_n(x) - n! sum (-1)^m c_{m+1}/m! C(x-m-1, n-m)",
            &[N],
            |p| same(integral(SECOND, p.n + 1, 1)?, chen4_rhs(p.n, 1, RecurrenceSign::Plus)),
        ),
        IdentityCase::new(
            "G06.a-expansion",
            "c_{n+1}(x) and c^_{n+1}(x) as double sums over [m k] A_x(n+1, m)",
            &[N],
            |p| {
                let n1 = p.n + 1;
                let inner = |k: usize, reflect: bool| {
                    sum_p((k..=n1).map(|m| {
                        let am = a(n1, m as i64);
                        let am = if reflect { neg(&am) } else { am };
                        am.scale(&(sg(m - k) * stirling1(m, k)))
                    }))
                };
                let first = sum_p((0..=n1).map(|k| inner(k, false).scale(&(sg(n1 - k) * inv(k + 1)))));
                let second = sum_p((0..=n1).map(|k| inner(k, true).scale(&inv(k + 1)))).scale(&sg(n1));
                all([same(c(n1), first), same(ch(n1), second)])
            },
        ),
        IdentityCase::new("G06.guo", "A_x(n+1, m) = A_x(n, m-1) + (n+m+x) A_x(n, m)", &[N], |p| {
            let n = p.n;
            all((0..=n as i64 + 1).map(|m| {
                let rhs = a(n, m - 1) + (x() + cst(z(n as i64 + m))) * a(n, m);
                same(a(n + 1, m), rhs)
            }))
        }),
        IdentityCase::new("G06.guo-prop3", "m A_x(n,m) = m n A_x(n-1,m) + n A_x(n-1,m-1)", &[N], |p| {
            let n = p.n;
            all((0..=n as i64).map(|m| {
                let rhs = a(n - 1, m).scale(&z(m * n as i64)) + a(n - 1, m - 1).scale(&zu(n));
                same(a(n, m).scale(&z(m)), rhs)
            }))
        })
        .min_n(1),
        IdentityCase::new(
            "G06.nstep1",
            "c_n(x) = -n c_{n-1}(x) + (-1)^n n! sum c^_m/m! C(x+n-2, n-m)",
            &[N],
            |p| {
                let n = p.n;
                let s = sum_p((0..=n).map(|m| bin(&(zu(n) - z(2)), n - m).scale(&(chn(m) / factorial(m)))));
                same(c(n), c(n - 1).scale(&-zu(n)) + s.scale(&(sg(n) * factorial(n))))
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G06.nstep2",
            "c^_n(x) = -n c^_{n-1}(x) + n! sum (-1)^m c_m/m! C(x+1-m, n-m)",
            &[N],
            |p| {
                let n = p.n;
                let s = sum_p((0..=n).map(|m| bin(&(z(1) - zu(m)), n - m).scale(&(sg(m) * cn(m) / factorial(m)))));
                same(ch(n), ch(n - 1).scale(&-zu(n)) + s.scale(&factorial(n)))
            },
        )
        .min_n(1),
        IdentityCase::new("G06.diff1", "c_n(x+1) - c_n(x) = -n c_{n-1}(x+1)", &[N], |p| {
            let n = p.n;
            same(sh(&c(n), &z(1)) - c(n), sh(&c(n - 1), &z(1)).scale(&-zu(n)))
        })
        .min_n(1),
        IdentityCase::new("G06.diff2", "c^_n(x+1) - c^_n(x) = n c^_{n-1}(x)", &[N], |p| {
            let n = p.n;
            same(sh(&ch(n), &z(1)) - ch(n), ch(n - 1).scale(&zu(n)))
        })
        .min_n(1),
        IdentityCase::new("G06.reflection-shift", "c_n(x) = c^_n(-x) + n c^_{n-1}(-x)", &[N], |p| {
            let n = p.n;
            same(c(n), neg(&ch(n)) + neg(&ch(n - 1)).scale(&zu(n)))
        })
        .min_n(1),
        IdentityCase::new("G06.seq1", "c_n(x) = (-1)^n sum c^_m A_x(n,m)", &[N], |p| {
            let n = p.n;
            same(c(n), sum_p((0..=n).map(|m| a(n, m as i64).scale(&chn(m)))).scale(&sg(n)))
        }),
        IdentityCase::new("G06.seq2", "c^_n(-x) = (-1)^n sum c_m A_x(n,m)", &[N], |p| {
            let n = p.n;
            same(neg(&ch(n)), sum_p((0..=n).map(|m| a(n, m as i64).scale(&cn(m)))).scale(&sg(n)))
        }),
        IdentityCase::probe(
            "G06.k-recurrence-sign",
            "sign of (x-n) in the poly-Cauchy recurrence c^_{n+1}^(k)(x) = +-(x-n) c^_n^(k)(x) - n! sum (-1)^m c_{m+1}^(k)/m! C(x-m-1, n-m)",
            &[N, K],
            &["+(x-n)", "-(x-n)"],
            sign_probe,
        ),
    ]
}

fn g07() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "G07.even-first",
            "c_{2n}(x) = n sum u(n,m)/m ((x+n-1)^(2m) - B_{2m})",
            &[N],
            |p| {
                let n = p.n;
                let rhs = sum_p((1..=n).map(|m| {
                    (lin_pow(&(zu(n) - z(1)), 2 * m) - cst(bn(2 * m))).scale(&(u(n, m) * inv(m)))
                }));
                same(integral(FIRST, 2 * n, 1)?, rhs.scale(&zu(n)))
            },
        )
        .when(half_index),
        IdentityCase::new("G07.even-second", "c^_{2n}(x) = n sum u(n,m)/m ((x-n)^(2m) - B_{2m})", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((1..=n).map(|m| (lin_pow(&-zu(n), 2 * m) - cst(bn(2 * m))).scale(&(u(n, m) * inv(m)))));
            same(integral(SECOND, 2 * n, 1)?, rhs.scale(&zu(n)))
        })
        .when(half_index),
        IdentityCase::new("G07.odd-first", "c_{2n+1}(x) = -(2n+1) sum u(n,m)/(2m+1) E_{2m+1}(x+n)", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((1..=n).map(|m| sh(&euler_poly(2 * m + 1), &zu(n)).scale(&(u(n, m) * inv(2 * m + 1)))));
            same(integral(FIRST, 2 * n + 1, 1)?, rhs.scale(&-zu(2 * n + 1)))
        })
        .when(half_index),
        IdentityCase::new("G07.odd-second", "c^_{2n+1}(x) = (2n+1) sum u(n,m)/(2m+1) E_{2m+1}(x-n)", &[N], |p| {
            let n = p.n;
            let rhs = sum_p((1..=n).map(|m| sh(&euler_poly(2 * m + 1), &-zu(n)).scale(&(u(n, m) * inv(2 * m + 1)))));
            same(integral(SECOND, 2 * n + 1, 1)?, rhs.scale(&zu(2 * n + 1)))
        })
        .when(half_index),
        IdentityCase::new(
            "G07.central-power",
            "(2n)! C(x+n+1, 2n+1) = sum u(n,m) 2^(2m+1) S_{2m}(x/2)",
            &[N],
            |p| {
                let n = p.n;
                let rhs = sum_p((1..=n).map(|m| {
                    power_sum_poly(2 * m).dilate(&q(1, 2)).scale(&(u(n, m) * pw(&z(2), 2 * m + 1)))
                }));
                same(bin(&zu(n + 1), 2 * n + 1).scale(&factorial(2 * n)), rhs)
            },
        )
        .when(half_index),
        IdentityCase::new(
            "G07.cf1",
            "c_{2n+1}(s)/(2n+1) = sum u(n,m)/(2m+1) 2^(2m+2) int B_{2m+1} over [(1-s-n)/2, (2-s-n)/2]",
            &[N, X],
            |p| {
                let n = p.n;
                let s = &p.x;
                let lo = (z(1) - s - zu(n)) / z(2);
                let hi = (z(2) - s - zu(n)) / z(2);
                let rhs = sum_r((1..=n).map(|m| {
                    let anti = bernoulli_poly(2 * m + 1).antiderivative();
                    u(n, m) * inv(2 * m + 1) * pw(&z(2), 2 * m + 2) * (ev(&anti, &hi) - ev(&anti, &lo))
                }));
                same(ev(&integral(FIRST, 2 * n + 1, 1)?, s) * inv(2 * n + 1), rhs)
            },
        )
        .when(half_index),
        IdentityCase::new(
            "G07.power-sum-integral",
            "int_0^1 S_{2m}((x-s-n-1)/2) dx = (1/(2m+1)) int_0^1 B_{2m+1}((x-s-n+1)/2) dx = (2/(2m+1)) int B_{2m+1} over [(1-s-n)/2, (2-s-n)/2]",
            &[N, R, X],
            |p| {
                let (m, n, s) = (p.n, p.r, &p.x);
                let half = |poly: RatPoly, shift: Rational| poly.dilate(&q(1, 2)).shift(&shift).integrate_01();
                let a1 = half(power_sum_poly(2 * m), -s - zu(n) - z(1));
                let a2 = half(bernoulli_poly(2 * m + 1), -s - zu(n) + z(1)) * inv(2 * m + 1);
                let anti = bernoulli_poly(2 * m + 1).antiderivative();
                let lo = (z(1) - s - zu(n)) / z(2);
                let hi = (z(2) - s - zu(n)) / z(2);
                let a3 = z(2) * inv(2 * m + 1) * (ev(&anti, &hi) - ev(&anti, &lo));
                all([same(a1, a2.clone()), same(a2, a3)])
            },
        )
        .when(half_index),
        IdentityCase::new("G07.moll", "int_a^(a+1/2) B_n(x) dx = E_n(2a)/2^(n+1)", &[N], |p| {
            let n = p.n;
            let anti = bernoulli_poly(n).antiderivative();
            same(sh(&anti, &q(1, 2)) - anti, euler_poly(n).dilate(&z(2)).scale(&(z(1) / pw(&z(2), n + 1))))
        }),
        IdentityCase::new("G07.euler-reflection", "E_n(1-x) = (-1)^n E_n(x)", &[N], |p| {
            same(refl(&euler_poly(p.n), &z(1)), euler_poly(p.n).scale(&sg(p.n)))
        }),
        IdentityCase::new("G07.central-recurrence", "u(n+1, m) = u(n, m-1) - n^2 u(n, m)", &[N], |p| {
            let n = p.n;
            all((1..=n + 1).map(|m| {
                let prev = if m <= n { u(n, m) } else { z(0) };
                same(u(n + 1, m), u(n, m - 1) - zu(n * n) * prev)
            }))
        }),
    ]
}

fn w(kind: StirlingKind, p: &Point, n: usize, l: usize) -> Result<Rational, Mismatch> {
    Ok(whitney(kind, p.m, p.r as i64, n, l)?)
}

fn g08() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "G08.connection1",
            "m^n (x)_n = sum (-1)^(n-l) w_{m,r}(n,l) (m x + r)^l",
            &[N, R, M],
            |p| {
                let n = p.n;
                let mx_r = x().scale(&z(p.m)) + cst(zu(p.r));
                let mut rhs = RatPoly::new(vec![]);
                for l in 0..=n {
                    rhs += mx_r.pow(l).scale(&(sg(n - l) * w(StirlingKind::First, p, n, l)?));
                }
                same(RatPoly::falling(n).scale(&pwi(&z(p.m), n as i64)), rhs)
            },
        ),
        IdentityCase::new("G08.connection2", "(m x + r)^n = sum m^l W_{m,r}(n,l) (x)_l", &[N, R, M], |p| {
            let n = p.n;
            let mx_r = x().scale(&z(p.m)) + cst(zu(p.r));
            let mut rhs = RatPoly::new(vec![]);
            for l in 0..=n {
                rhs += RatPoly::falling(l).scale(&(pwi(&z(p.m), l as i64) * w(StirlingKind::Second, p, n, l)?));
            }
            same(mx_r.pow(n), rhs)
        }),
        IdentityCase::new(
            "G08.stirling-form",
            "w_{m,r}(n,l) and W_{m,r}(n,l) from ordinary Stirling numbers equal m^(n-l) times the GSN at r/m",
            &[N, R, M],
            |p| {
                let n = p.n;
                let mut checks = Vec::new();
                for l in 0..=n {
                    for kind in [StirlingKind::First, StirlingKind::Second] {
                        checks.push(same(whitney_by_stirling(kind, p.m, p.r as i64, n, l)?, w(kind, p, n, l)?));
                    }
                }
                all(checks)
            },
        ),
        IdentityCase::new("G08.whit1", "c_n(r/m) = sum (-1)^(n-l)/(l+1) w_{m,r}(n,l)/m^(n-l)", &[N, R, M], |p| {
            let n = p.n;
            let mut rhs = z(0);
            for l in 0..=n {
                rhs += sg(n - l) * inv(l + 1) * w(StirlingKind::First, p, n, l)? / pwi(&z(p.m), (n - l) as i64);
            }
            same(ev(&c(n), &q(p.r as i64, p.m)), rhs)
        }),
        IdentityCase::new("G08.whit2", "c^_n(-r/m) = (-1)^n sum 1/(l+1) w_{m,r}(n,l)/m^(n-l)", &[N, R, M], |p| {
            let n = p.n;
            let mut rhs = z(0);
            for l in 0..=n {
                rhs += inv(l + 1) * w(StirlingKind::First, p, n, l)? / pwi(&z(p.m), (n - l) as i64);
            }
            same(ev(&ch(n), &q(-(p.r as i64), p.m)), sg(n) * rhs)
        }),
        IdentityCase::new("G08.whit1-reversed", "sum m^l W_{m,r}(n,l) c_l(r/m) = m^n/(n+1)", &[N, R, M], |p| {
            let n = p.n;
            let mut lhs = z(0);
            for l in 0..=n {
                lhs += pwi(&z(p.m), l as i64) * w(StirlingKind::Second, p, n, l)? * ev(&c(l), &q(p.r as i64, p.m));
            }
            same(lhs, pwi(&z(p.m), n as i64) * inv(n + 1))
        }),
        IdentityCase::new(
            "G08.whit2-reversed",
            "sum m^l W_{m,r}(n,l) c^_l(-r/m) = (-1)^n m^n/(n+1)",
            &[N, R, M],
            |p| {
                let n = p.n;
                let mut lhs = z(0);
                for l in 0..=n {
                    lhs += pwi(&z(p.m), l as i64)
                        * w(StirlingKind::Second, p, n, l)?
                        * ev(&ch(l), &q(-(p.r as i64), p.m));
                }
                same(lhs, sg(n) * pwi(&z(p.m), n as i64) * inv(n + 1))
            },
        ),
    ]
}

pub(super) fn cases() -> Vec<IdentityCase> {
    let mut v = g05();
    v.extend(g06());
    v.extend(g07());
    v.extend(g08());
    v
}
