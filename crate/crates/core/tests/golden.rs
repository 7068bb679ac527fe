mod support;

use polycauchy::{cauchy, cauchy_poly, int, q, CauchyKind, Construction, MultiParam};
use support::{c6, first_table, second_table};

#[test]
fn cauchy_tables_under_every_construction() {
    for (kind, table) in [(CauchyKind::First, first_table()), (CauchyKind::Second, second_table())] {
        for (n, expected) in table.iter().enumerate() {
            for c in Construction::ALL {
                let got = cauchy_poly(kind, n, 1, c).unwrap();
                assert_eq!(&got, expected, "{kind:?} n={n} construction={}", c.name());
            }
        }
    }
}

#[test]
fn poly_cauchy_sixth_expansion() {
    for kind in [CauchyKind::First, CauchyKind::Second] {
        for k in 1..=4 {
            let expected = c6(kind, k);
            assert_eq!(cauchy(kind, 6, k), expected, "{kind:?} k={k}");
            for c in [Construction::Integral, Construction::BinomialConv] {
                assert_eq!(cauchy_poly(kind, 6, k, c).unwrap(), expected, "{kind:?} k={k} {}", c.name());
            }
        }
    }
}

#[test]
fn multiparameter_at_golden_ratio_point() {
    let p = MultiParam::new(4, 1, int(-3), vec![int(1), int(1), q(1, 2)], q(-3, 2)).unwrap();
    let first = polycauchy::multiparam_cauchy(CauchyKind::First, &p).unwrap();
    assert_eq!(first.eval_quadratic_surd(&int(5)), (q(114177911, 144000), q(-284203, 768)));
    let second = polycauchy::multiparam_cauchy(CauchyKind::Second, &p).unwrap();
    assert_eq!(second.eval_quadratic_surd(&int(5)), (q(14046697, 288000), q(10805, 768)));
}
