//! Hyperharmonic polynomials `H_n^(x)` and harmonic polynomials `H_m(x)`.
//!
//! `H_n^(x)` is a polynomial in the order variable `x`; hyperharmonic numbers
//! of integer order are its values.

use std::sync::RwLock;

use num_traits::Zero;

pub use crate::exact::harmonic_number;
use crate::exact::{int, q};
use crate::poly::RatPoly;
use crate::series::{gf_harmonic, DEFAULT_ORDER};

/// `H_n^(x) = sum_{t=1}^n C(x+n-t-1, n-t)/t`, with `H_0^(x) = 0`.
pub fn hyperharmonic_poly(n: usize) -> RatPoly {
    (1..=n)
        .map(|t| RatPoly::binom_poly(&int((n - t) as i64 - 1), 1, n - t).scale(&q(1, t as i64)))
        .fold(RatPoly::zero(), |acc, p| acc + p)
}

static HARMONIC: RwLock<Vec<RatPoly>> = RwLock::new(Vec::new());

/// Harmonic polynomial `H_m(x)`, read off `-log(1-t)/(t (1-t)^(1-x))`.
pub fn harmonic_poly(m: usize) -> RatPoly {
    if let Some(p) = HARMONIC.read().expect("harmonic lock poisoned").get(m) {
        return p.clone();
    }
    let order = m.max(DEFAULT_ORDER);
    let seq = gf_harmonic(order).coeffs().to_vec();
    let p = seq[m].clone();
    let mut guard = HARMONIC.write().expect("harmonic lock poisoned");
    if guard.len() < seq.len() {
        *guard = seq;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::gf_hyperharmonic;
    use num_traits::One;

    fn poly(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn hyperharmonic_examples() {
        assert!(hyperharmonic_poly(0).is_zero());
        assert_eq!(hyperharmonic_poly(1), RatPoly::one());
        assert_eq!(hyperharmonic_poly(2), poly(&[(1, 2), (1, 1)]));
        assert_eq!(hyperharmonic_poly(4), poly(&[(1, 4), (11, 12), (3, 4), (1, 6)]));
        assert_eq!(
            hyperharmonic_poly(7),
            poly(&[(1, 7), (7, 10), (29, 30), (7, 12), (25, 144), (1, 40), (1, 720)])
        );
    }

    #[test]
    fn hyperharmonic_matches_series() {
        let gf = gf_hyperharmonic(12);
        for n in 0..=12 {
            assert_eq!(hyperharmonic_poly(n), *gf.coeff(n), "n={n}");
        }
    }

    #[test]
    fn hyperharmonic_special_orders() {
        for n in 1..=10 {
            let h = hyperharmonic_poly(n);
            assert_eq!(h.degree(), Some(n - 1));
            assert_eq!(h.eval(&int(0)), q(1, n as i64));
            assert_eq!(h.eval(&int(1)), harmonic_number(n));
        }
    }

    #[test]
    fn order_minus_one() {
        assert_eq!(hyperharmonic_poly(1).eval(&int(-1)), int(1));
        for n in 1..=10i64 {
            assert_eq!(hyperharmonic_poly(n as usize + 1).eval(&int(-1)), q(-1, n * (n + 1)));
        }
    }

    #[test]
    fn derivative_of_binomial() {
        for j in 0..=10usize {
            let b = RatPoly::binom_poly(&int(j as i64), 1, j + 1);
            assert_eq!(hyperharmonic_poly(j + 1), b.derivative(1));
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic_poly(0), RatPoly::one());
        assert_eq!(harmonic_poly(1), poly(&[(3, 2), (-1, 1)]));
        for m in 0..=14 {
            assert_eq!(harmonic_poly(m).eval(&int(0)), harmonic_number(m + 1));
            assert_eq!(harmonic_poly(m).degree(), Some(m));
        }
    }
}
