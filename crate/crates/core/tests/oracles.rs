use num_traits::Zero;
use polycauchy::series::{gf_cauchy1, gf_cauchy2, gf_gen_bernoulli};
use polycauchy::{
    bernoulli_number, bernoulli_poly, cauchy, cauchy_poly, factorial, gsn1, gsn2, int, q, stirling1, stirling2,
    CauchyKind, Construction, RatPoly,
};

#[test]
fn generating_functions_match_gsn() {
    let order = 12;
    let (g1, g2) = (gf_cauchy1(order), gf_cauchy2(order));
    for n in 0..=order {
        assert_eq!(g1.coeff(n).scale(&factorial(n)), cauchy(CauchyKind::First, n, 1), "first n={n}");
        assert_eq!(g2.coeff(n).scale(&factorial(n)), cauchy(CauchyKind::Second, n, 1), "second n={n}");
    }
}

#[test]
fn bernoulli_numbers_from_series() {
    let g = gf_gen_bernoulli(1, 12);
    for n in 0..=12 {
        let b = g.coeff(n).scale(&factorial(n));
        assert_eq!(b, bernoulli_poly(n));
        assert_eq!(b.coeff(0), bernoulli_number(n));
        if n >= 3 && n % 2 == 1 {
            assert!(b.coeff(0).is_zero(), "B_{n}");
        }
    }
    assert_eq!(bernoulli_number(4), q(-1, 30));
    assert_eq!(bernoulli_number(1), q(-1, 2));
}

#[test]
fn integral_construction_is_the_reference_for_k_above_one() {
    for kind in [CauchyKind::First, CauchyKind::Second] {
        for k in 1..=4 {
            for n in 0..=10 {
                let oracle = cauchy_poly(kind, n, k, Construction::Integral).unwrap();
                assert_eq!(cauchy(kind, n, k), oracle, "{kind:?} n={n} k={k}");
            }
        }
    }
}

#[test]
fn gsn_orthogonality() {
    for n in 0..=10 {
        for m in 0..=n {
            let mut acc = RatPoly::zero();
            for l in m..=n {
                let sign = if (n - l) % 2 == 0 { int(1) } else { int(-1) };
                acc += (gsn2(n, l).unwrap() * gsn1(l, m).unwrap()).scale(&sign);
            }
            let expected = if n == m { RatPoly::constant(int(1)) } else { RatPoly::zero() };
            assert_eq!(acc, expected, "n={n} m={m}");
        }
    }
}

#[test]
fn gsn_at_zero_are_stirling_numbers() {
    for n in 0..=9 {
        for m in 0..=n {
            assert_eq!(gsn1(n, m).unwrap().eval(&int(0)), stirling1(n, m));
            assert_eq!(gsn2(n, m).unwrap().eval(&int(0)), stirling2(n, m));
        }
    }
}
