//! Multiparameter poly-Cauchy polynomials and the harmonic polynomials.

use num_traits::Zero;
use polycauchy::cauchy::{multiparam_cauchy_in_y, multiparam_cauchy_integral, shifted_number};
use polycauchy::stirling::{stirling_pair_at, stirling_pair_in_y};
use polycauchy::{
    c_aux_poly_l, harmonic_number, harmonic_poly, hyperharmonic_poly, multiparam_cauchy, multiparam_poly_bernoulli,
    poly_bernoulli_kl, CauchyKind, MultiParam, RatPoly, Rational, StirlingKind,
};

use super::util::*;
use crate::case::{all, same, IdentityCase, Mismatch};
use crate::grid::Dim::*;
use crate::grid::Point;

fn mp(p: &Point) -> Result<MultiParam, Mismatch> {
    Ok(MultiParam::new(p.n, p.a, p.q.clone(), p.l.clone(), p.y.clone())?)
}

fn mpc(kind: CauchyKind, p: &MultiParam) -> Result<RatPoly, Mismatch> {
    Ok(multiparam_cauchy(kind, p)?)
}

fn s1yq(n: usize, m: usize, y: &Rational, q: &Rational) -> Result<Rational, Mismatch> {
    Ok(stirling_pair_at(StirlingKind::First, n, m, y, q)?)
}

fn s2yq(n: usize, m: usize, y: &Rational, q: &Rational) -> Result<Rational, Mismatch> {
    Ok(stirling_pair_at(StirlingKind::Second, n, m, y, q)?)
}

fn ones(k: usize) -> Vec<Rational> {
    vec![z(1); k]
}

/// `prod_{j<n} (x - (y + j q))`.
fn shifted_falling(n: usize, y: &Rational, q: &Rational) -> RatPoly {
    (0..n).fold(one(), |acc, j| acc * lin_pow(&-(y + zu(j) * q), 1))
}

/// `int over the box of L` applied to a polynomial in `t = t_1...t_k`.
fn box_integral(poly_t: &RatPoly, l: &[Rational]) -> Rational {
    let lp = l.iter().fold(z(1), |acc, v| acc * v);
    poly_t.functional(|i| pw(&lp, i + 1) * invk(i + 1, l.len()))
}

fn g21_core() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "G21.shif",
            "c_{n,a,q,L}^(k) = sum (-q)^(n-m) (l_1...l_k)^(m+a)/(m+a)^k [n m] and c^_{n,a,q,L}^(k) = (-1)^n sum q^(n-m) (l_1...l_k)^(m+a)/(m+a)^k [n m]",
            &[N, A, Q, L],
            |p| {
                let (n, a, q) = (p.n, p.a, &p.q);
                // The defining integrals, expanded in t = t_1...t_k.
                let first = (1..n).fold(xp(a), |acc, j| acc * lin_pow(&-(zu(j) * q), 1));
                let second = (1..n).fold(neg(&xp(a)), |acc, j| acc * (neg(&x()) - cst(zu(j) * q)));
                let mp = mp(p)?;
                all([
                    same(shifted_number(FIRST, &mp)?, box_integral(&first, &p.l)),
                    same(shifted_number(SECOND, &mp)?, sg(a - 1) * box_integral(&second, &p.l)),
                ])
            },
        )
        .min_n(1),
        IdentityCase::new(
            "G21.bivar-gf",
            "prod_{j<n} (x - (y + j q)) = sum (-1)^(n-m) [n m]_(y,q) x^m",
            &[N, Q, Y],
            |p| {
                let n = p.n;
                let mut rhs = RatPoly::zero();
                for m in 0..=n {
                    rhs += xp(m).scale(&(sg(n - m) * s1yq(n, m, &p.y, &p.q)?));
                }
                same(shifted_falling(n, &p.y, &p.q), rhs)
            },
        ),
        IdentityCase::new(
            "G21.pair-second",
            "x^n = sum {n m}_(y,q) prod_{j<m} (x - (y + j q)), {n m}_(y,q) = (1/(m! q^m)) sum (-1)^(m-l) C(m,l) (y + l q)^n",
            &[N, Q, Y],
            |p| {
                let (n, y, q) = (p.n, &p.y, &p.q);
                let mut rhs = RatPoly::zero();
                for m in 0..=n {
                    let closed = sum_r((0..=m).map(|l| sg(m - l) * binom(m, l) * pw(&(y + zu(l) * q), n)))
                        / (factorial(m) * pw(q, m));
                    let s = s2yq(n, m, y, q)?;
                    if s != closed {
                        return same(s, closed);
                    }
                    rhs += shifted_falling(m, y, q).scale(&s);
                }
                same(xp(n), rhs)
            },
        ),
        IdentityCase::new(
            "G21.pair-orthogonality",
            "sum_m (-1)^(m-l) {n m}_(y,q) [m l]_(y,q) = [n = l]",
            &[N, I, Q, Y],
            |p| {
                let (n, l) = (p.n, p.i);
                let mut s = z(0);
                for m in l..=n {
                    s += sg(m - l) * s2yq(n, m, &p.y, &p.q)? * s1yq(m, l, &p.y, &p.q)?;
                }
                same(s, delta(n, l))
            },
        )
        .double(),
        IdentityCase::new("G21.pair-at-y-zero", "[n m]_(0,q) = [n m] q^(n-m)", &[N, I, Q], |p| {
            let (n, m) = (p.n, p.i);
            same(s1yq(n, m, &z(0), &p.q)?, stirling1(n, m) * pw(&p.q, n - m))
        }),
        IdentityCase::new(
            "G21.stirling-pair-form",
            "c_{n,a,q,L,y}^(k)(x) and c^_{n,a,q,L,y}^(k)(x) from the Stirling pair and CC_{m+a-1}^(k)(x; L) match their defining integrals",
            &[N, A, Q, L, Y],
            |p| {
                let mp = mp(p)?;
                all([
                    same(mpc(FIRST, &mp)?, multiparam_cauchy_integral(FIRST, &mp)?),
                    same(mpc(SECOND, &mp)?, multiparam_cauchy_integral(SECOND, &mp)?),
                ])
            },
        )
        .double(),
        IdentityCase::new("G21.degree", "c_{n,a,q,L,y}^(k)(x) has degree n+a-1 in x", &[N, A, Q, L, Y], |p| {
            let mp = mp(p)?;
            let d = Some(p.n + p.a - 1);
            all([same(format!("{:?}", mpc(FIRST, &mp)?.degree()), format!("{d:?}")), same(
                format!("{:?}", mpc(SECOND, &mp)?.degree()),
                format!("{d:?}"),
            )])
        })
        .double(),
        IdentityCase::new(
            "G21.ordinary",
            "a = q = l_i = 1, y = 0: c_n^(k)(x) = sum (-1)^n [n m] CC_m^(k)(x) and c^_n^(k)(x) = sum (-1)^(n-m) [n m] CC_m^(k)(x)",
            &[N, K],
            |p| {
                let (n, k) = (p.n, p.k);
                let mp = MultiParam::new(n, 1, z(1), ones(k), z(0))?;
                let f = sum_p((0..=n).map(|m| polycauchy::c_aux_poly(m, k).scale(&(sg(n) * stirling1(n, m)))));
                let s = sum_p((0..=n).map(|m| polycauchy::c_aux_poly(m, k).scale(&(sg(n - m) * stirling1(n, m)))));
                all([
                    same(mpc(FIRST, &mp)?, f.clone()),
                    same(f, ck(n, k)),
                    same(mpc(SECOND, &mp)?, s.clone()),
                    same(s, chk(n, k)),
                ])
            },
        ),
        IdentityCase::new(
            "G21.at-x-zero",
            "c_{n,a,q,L,y}^(k)(0) = sum (-1)^(n-m) [n m]_(y,q) (l_1...l_k)^(m+a)/(m+a)^k and c^(0) = (-1)^n sum [n m]_(-y,q) (l_1...l_k)^(m+a)/(m+a)^k",
            &[N, A, Q, L, Y],
            |p| {
                let (n, a) = (p.n, p.a);
                let mp = mp(p)?;
                let lp = mp.l_product();
                let (mut f, mut s) = (z(0), z(0));
                for m in 0..=n {
                    let w = pw(&lp, m + a) * invk(m + a, p.k);
                    f += sg(n - m) * s1yq(n, m, &p.y, &p.q)? * &w;
                    s += s1yq(n, m, &-p.y.clone(), &p.q)? * w;
                }
                all([same(ev(&mpc(FIRST, &mp)?, &z(0)), f), same(ev(&mpc(SECOND, &mp)?, &z(0)), sg(n) * s)])
            },
        )
        .double(),
        IdentityCase::new(
            "G21.at-x-zero-y-zero",
            "c_{n,a,q,L,0}^(k)(0) and c^_{n,a,q,L,0}^(k)(0) are the shifted numbers with a q parameter",
            &[N, A, Q, L],
            |p| {
                let mp = mp(p)?.with_y(z(0));
                all([
                    same(ev(&mpc(FIRST, &mp)?, &z(0)), shifted_number(FIRST, &mp)?),
                    same(ev(&mpc(SECOND, &mp)?, &z(0)), shifted_number(SECOND, &mp)?),
                ])
            },
        ),
        IdentityCase::new(
            "G21.at-x-zero-ordinary",
            "a = q = l_i = 1: c_{n,1,1,L,y}^(k)(0) = c_n^(k)(y) and c^_{n,1,1,L,y}^(k)(0) = c^_n^(k)(y)",
            &[N, K, Y],
            |p| {
                let (n, k) = (p.n, p.k);
                let mp = MultiParam::new(n, 1, z(1), ones(k), p.y.clone())?;
                all([
                    same(ev(&mpc(FIRST, &mp)?, &z(0)), ev(&ck(n, k), &p.y)),
                    same(ev(&mpc(SECOND, &mp)?, &z(0)), ev(&chk(n, k), &p.y)),
                ])
            },
        ),
        IdentityCase::new(
            "G21.a1-symmetry",
            "for a = 1 the polynomials are invariant under x <-> y",
            &[N, Q, L, Y],
            |p| {
                let mut mp = mp(p)?;
                mp.a = 1;
                let mut checks = Vec::new();
                for kind in [FIRST, SECOND] {
                    checks.push(same(mpc(kind, &mp)?, multiparam_cauchy_in_y(kind, &mp, &p.y)?));
                }
                all(checks)
            },
        )
        .double(),
        IdentityCase::new("G21.sqrt5", "c^(3)_{4,1,-3,(1,1,1/2),-3/2}(sqrt 5) = c^(3)_{4,1,-3,(1,1,1/2),sqrt 5}(-3/2), and the same for c^", &[], |_| {
            let l = vec![z(1), z(1), q(1, 2)];
            let mp = MultiParam::new(4, 1, z(-3), l, q(-3, 2))?;
            let five = z(5);
            let expected = [(q(114177911, 144000), q(-284203, 768)), (q(14046697, 288000), q(10805, 768))];
            let mut checks = Vec::new();
            for (kind, (a, b)) in [FIRST, SECOND].into_iter().zip(expected) {
                let at_x = mpc(kind, &mp)?.eval_quadratic_surd(&five);
                let at_y = multiparam_cauchy_in_y(kind, &mp, &q(-3, 2))?.eval_quadratic_surd(&five);
                let show = |v: (Rational, Rational)| format!("{} + {} sqrt5", v.0, v.1);
                checks.push(same(show(at_x), show((a.clone(), b.clone()))));
                checks.push(same(show(at_y), show((a, b))));
            }
            all(checks)
        }),
        IdentityCase::new("G21.minus-q", "c_{n,a,q,L,y}^(k)(x) = (-1)^n c^_{n,a,-q,L,y}^(k)(x)", &[N, A, Q, L, Y], |p| {
            let mp = mp(p)?;
            let flipped = MultiParam { q: -p.q.clone(), ..mp.clone() };
            same(mpc(FIRST, &mp)?, mpc(SECOND, &flipped)?.scale(&sg(p.n)))
        })
        .double(),
        IdentityCase::new("G21.def2", "CC_j^(k)(x; L) = sum (-1)^i/(i+1)^k (l_1...l_k)^(i+1) C(j,i) x^(j-i), CC_0 = l_1...l_k", &[N, L], |p| {
            let j = p.n;
            let lp = p.l.iter().fold(z(1), |acc, v| acc * v);
            let expected = if j == 0 {
                cst(lp)
            } else {
                sum_p((0..=j).map(|i| xp(j - i).scale(&(sg(i) * invk(i + 1, p.k) * pw(&lp, i + 1) * binom(j, i)))))
            };
            same(c_aux_poly_l(j, &p.l), expected)
        }),
    ]
}

fn bfrak(p: &MultiParam, n: usize) -> Result<RatPoly, Mismatch> {
    Ok(multiparam_poly_bernoulli(&MultiParam { n, ..p.clone() })?)
}

/// `f(0..=p.n)`, computed once per point.
fn family(p: &MultiParam, f: impl Fn(usize) -> Result<RatPoly, Mismatch>) -> Result<Vec<RatPoly>, Mismatch> {
    (0..=p.n).map(f).collect()
}

fn g21_bernoulli() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(
            "G21.bfrak1",
            "B_{n,a,q,L,y}^(k)(x) = (-1)^(n+a-1) sum sum (-1)^m m! {n m}_(y,q) {m l}_(y,q) c_{l,a,q,L,y}^(k)(x)",
            &[N, A, Q, L, Y],
            |p| {
                let (n, y, q) = (p.n, &p.y, &p.q);
                let mp = mp(p)?;
                let cs = family(&mp, |l| mpc(FIRST, &MultiParam { n: l, ..mp.clone() }))?;
                let mut weights = vec![z(0); n + 1];
                for m in 0..=n {
                    #[allow(clippy::needless_range_loop)]
                    for l in 0..=m {
                        weights[l] += sg(m) * factorial(m) * s2yq(n, m, y, q)? * s2yq(m, l, y, q)?;
                    }
                }
                let rhs = sum_p(cs.iter().zip(&weights).map(|(f, w)| f.scale(w)));
                same(bfrak(&mp, n)?, rhs.scale(&sg(n + p.a - 1)))
            },
        )
        .double(),
        IdentityCase::new(
            "G21.bfrak2",
            "B_{n,a,q,L,y}^(k)(x) = (-1)^(n+a-1) sum sum m! {n m}_(y,q) {m l}_(-y,q) c^_{l,a,q,L,y}^(k)(x)",
            &[N, A, Q, L, Y],
            |p| {
                let (n, y, q) = (p.n, &p.y, &p.q);
                let mp = mp(p)?;
                let cs = family(&mp, |l| mpc(SECOND, &MultiParam { n: l, ..mp.clone() }))?;
                let mut weights = vec![z(0); n + 1];
                for m in 0..=n {
                    #[allow(clippy::needless_range_loop)]
                    for l in 0..=m {
                        weights[l] += factorial(m) * s2yq(n, m, y, q)? * s2yq(m, l, &-y.clone(), q)?;
                    }
                }
                let rhs = sum_p(cs.iter().zip(&weights).map(|(f, w)| f.scale(w)));
                same(bfrak(&mp, n)?, rhs.scale(&sg(n + p.a - 1)))
            },
        )
        .double(),
        IdentityCase::new(
            "G21.bfrak3",
            "c_{n,a,q,L,y}^(k)(x) = (-1)^(n+a-1) sum sum (-1)^m/m! [n m]_(y,q) [m l]_(y,q) B_{l,a,q,L,y}^(k)(x)",
            &[N, A, Q, L, Y],
            |p| {
                let (n, y, q) = (p.n, &p.y, &p.q);
                let mp = mp(p)?;
                let bs = family(&mp, |l| bfrak(&mp, l))?;
                let mut weights = vec![z(0); n + 1];
                for m in 0..=n {
                    #[allow(clippy::needless_range_loop)]
                    for l in 0..=m {
                        weights[l] += sg(m) / factorial(m) * s1yq(n, m, y, q)? * s1yq(m, l, y, q)?;
                    }
                }
                let rhs = sum_p(bs.iter().zip(&weights).map(|(f, w)| f.scale(w)));
                same(mpc(FIRST, &mp)?, rhs.scale(&sg(n + p.a - 1)))
            },
        )
        .double(),
        IdentityCase::new(
            "G21.bfrak4",
            "c^_{n,a,q,L,y}^(k)(x) = (-1)^(n+a-1) sum sum 1/m! [n m]_(-y,q) [m l]_(y,q) B_{l,a,q,L,y}^(k)(x)",
            &[N, A, Q, L, Y],
            |p| {
                let (n, y, q) = (p.n, &p.y, &p.q);
                let mp = mp(p)?;
                let bs = family(&mp, |l| bfrak(&mp, l))?;
                let mut weights = vec![z(0); n + 1];
                for m in 0..=n {
                    #[allow(clippy::needless_range_loop)]
                    for l in 0..=m {
                        weights[l] += s1yq(n, m, &-y.clone(), q)? * s1yq(m, l, y, q)? / factorial(m);
                    }
                }
                let rhs = sum_p(bs.iter().zip(&weights).map(|(f, w)| f.scale(w)));
                same(mpc(SECOND, &mp)?, rhs.scale(&sg(n + p.a - 1)))
            },
        )
        .double(),
        IdentityCase::new(
            "G21.bfrak-reduces",
            "a = q = l_i = 1, y = 0: B_{n,1,1,L,0}^(k)(x) = bold-B_n^(k)(x)",
            &[N, K],
            |p| {
                let mp = MultiParam::new(p.n, 1, z(1), ones(p.k), z(0))?;
                same(bfrak(&mp, p.n)?, poly_bernoulli_kl(p.n, p.k)?)
            },
        ),
        IdentityCase::new(
            "G21.pair-in-y",
            "[n m]_(y,q) as a polynomial in y agrees with its values",
            &[N, I, Q, Y],
            |p| same(ev(&stirling_pair_in_y(StirlingKind::First, p.n, p.i, &p.q)?, &p.y), s1yq(p.n, p.i, &p.y, &p.q)?),
        ),
    ]
}

fn hp(m: usize) -> RatPoly {
    harmonic_poly(m)
}

fn g22() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new("G22.harmonic-gf", "H_m(x) = H_{m+1}^(1-x)", &[N], |p| {
            same(hp(p.n), refl(&hyperharmonic_poly(p.n + 1), &z(1)))
        }),
        IdentityCase::new("G22.at-zero", "H_m(0) = H_{m+1}", &[N], |p| same(ev(&hp(p.n), &z(0)), harmonic_number(p.n + 1))),
        IdentityCase::new("G22.harmonic-convolution-first", "sum (-1)^m H_m(x+1) c_{n-m}(y)/(n-m)! = C(x-y, n)", &[N, Y], |p| {
            let n = p.n;
            let lhs = sum_p((0..=n).map(|m| sh(&hp(m), &z(1)).scale(&(sg(m) * ev(&c(n - m), &p.y) / factorial(n - m)))));
            same(lhs, bin(&-p.y.clone(), n))
        }),
        IdentityCase::new("G22.harmonic-convolution-second", "sum (-1)^m H_m(x+2) c^_{n-m}(y)/(n-m)! = C(x+y, n)", &[N, Y], |p| {
            let n = p.n;
            let lhs = sum_p((0..=n).map(|m| sh(&hp(m), &z(2)).scale(&(sg(m) * ev(&ch(n - m), &p.y) / factorial(n - m)))));
            same(lhs, bin(&p.y, n))
        }),
        IdentityCase::new(
            "G22.second-kind",
            "c^_n(x)/n! = C(x, n) - sum_{m<n} (-1)^m c_{n-m}/(n-m-1)! H_m(x+1)",
            &[N],
            |p| {
                let n = p.n;
                let s = sum_p((0..n).map(|m| sh(&hp(m), &z(1)).scale(&(sg(m) * cn(n - m) / factorial(n - m - 1)))));
                same(ch(n).scale(&factorial(n).recip()), bin(&z(0), n) - s)
            },
        )
        .min_n(1),
        IdentityCase::probe(
            "G22.comparison",
            "sum (-1)^m c_m(-x)/(m! (n-m+1)(n-m+2)) = sum (-1)^(n-m) c_{n+1-m}/(n-m)! H_m(x)",
            &[N],
            &["c_m(-x) as printed", "c_m(2-x)"],
            |p| {
                let n = p.n;
                let rhs = sum_p((0..=n).map(|m| hp(m).scale(&(sg(n - m) * cn(n + 1 - m) / factorial(n - m)))));
                let lhs = |arg: &RatPoly| {
                    sum_p((0..=n).map(|m| c(m).compose(arg).scale(&(sg(m) / factorial(m) * inv(n - m + 1) * inv(n - m + 2)))))
                };
                vec![same(lhs(&neg(&x())), rhs.clone()), same(lhs(&refl(&x(), &z(2))), rhs)]
            },
        ),
        IdentityCase::probe(
            "G22.comparison-at-zero",
            "sum (-1)^m c_{n-m}/((n-m)! (m+1)(m+2)) = sum (-1)^m c_{n+1-m}/(n-m)! H_{m+1}",
            &[N],
            &["c_{n-m} as printed", "c_{n-m}(2)"],
            |p| {
                let n = p.n;
                let rhs = sum_r((0..=n).map(|m| sg(m) * cn(n + 1 - m) / factorial(n - m) * harmonic_number(m + 1)));
                let lhs = |at: Rational| {
                    sum_r((0..=n).map(|m| sg(m) * ev(&c(n - m), &at) / factorial(n - m) * inv(m + 1) * inv(m + 2)))
                };
                vec![same(lhs(z(0)), rhs.clone()), same(lhs(z(2)), rhs)]
            },
        ),
    ]
}

pub(super) fn cases() -> Vec<IdentityCase> {
    let mut v = g21_core();
    v.extend(g21_bernoulli());
    v.extend(g22());
    v
}
