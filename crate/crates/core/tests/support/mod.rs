//! Displayed Cauchy polynomials shared by the golden tests and the acceptance run.

use polycauchy::{int, q, CauchyKind, RatPoly, Rational};

pub fn poly(cs: &[(i64, i64)]) -> RatPoly {
    RatPoly::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
}

pub fn first_table() -> Vec<RatPoly> {
    vec![
        poly(&[(1, 1)]),
        poly(&[(1, 2), (-1, 1)]),
        poly(&[(-1, 6), (0, 1), (1, 1)]),
        poly(&[(1, 4), (0, 1), (-3, 2), (-1, 1)]),
        poly(&[(-19, 30), (0, 1), (4, 1), (4, 1), (1, 1)]),
        poly(&[(9, 4), (0, 1), (-15, 1), (-55, 3), (-15, 2), (-1, 1)]),
        poly(&[(-863, 84), (0, 1), (72, 1), (100, 1), (105, 2), (12, 1), (1, 1)]),
    ]
}

pub fn second_table() -> Vec<RatPoly> {
    vec![
        poly(&[(1, 1)]),
        poly(&[(-1, 2), (1, 1)]),
        poly(&[(5, 6), (-2, 1), (1, 1)]),
        poly(&[(-9, 4), (6, 1), (-9, 2), (1, 1)]),
        poly(&[(251, 30), (-24, 1), (22, 1), (-8, 1), (1, 1)]),
        poly(&[(-475, 12), (120, 1), (-125, 1), (175, 3), (-25, 2), (1, 1)]),
        poly(&[(19087, 84), (-720, 1), (822, 1), (-450, 1), (255, 2), (-18, 1), (1, 1)]),
    ]
}

/// `sum_j a_j / (j+2)^k` plus a constant, the shape of each displayed coefficient.
fn weighted(constant: i64, terms: &[i64], k: usize) -> Rational {
    let mut acc = int(constant);
    for (j, &a) in terms.iter().enumerate() {
        acc += int(a) / int(j as i64 + 2).pow(k as i32);
    }
    acc
}

pub fn c6(kind: CauchyKind, k: usize) -> RatPoly {
    let rows: [(i64, &[i64]); 7] = match kind {
        CauchyKind::First => [
            (0, &[-120, 274, -225, 85, -15, 1]),
            (120, &[-548, 675, -340, 75, -6]),
            (274, &[-675, 510, -150, 15]),
            (225, &[-340, 150, -20]),
            (85, &[-75, 15]),
            (15, &[-6]),
            (1, &[]),
        ],
        CauchyKind::Second => [
            (0, &[120, 274, 225, 85, 15, 1]),
            (-120, &[-548, -675, -340, -75, -6]),
            (274, &[675, 510, 150, 15]),
            (-225, &[-340, -150, -20]),
            (85, &[75, 15]),
            (-15, &[-6]),
            (1, &[]),
        ],
    };
    RatPoly::new(rows.iter().map(|&(c, t)| weighted(c, t, k)).collect())
}
