//! Exact-rational computation of Cauchy and poly-Cauchy polynomials and the
//! related Stirling, Bernoulli, Euler, r-Whitney and hyperharmonic families.
//!
//! Every value is an exact [`Rational`]; polynomials are dense
//! [`Polynomial`]s over a [`Ring`] and compare by canonical equality.
//!
//! ```
//! use polycauchy::{cauchy, CauchyKind, q};
//! let c4 = cauchy(CauchyKind::First, 4, 1);
//! assert_eq!(c4.coeff(0), q(-19, 30));
//! ```

pub mod bernoulli;
pub mod cache;
pub mod cauchy;
pub mod error;
pub mod exact;
pub mod harmonic;
pub mod parallel;
pub mod poly;
pub mod series;
pub mod stirling;

pub use bernoulli::{
    bernoulli_number, bernoulli_poly, euler_poly, gen_bernoulli_poly, multiparam_poly_bernoulli,
    poly_bernoulli_gsn, poly_bernoulli_kl, power_sum_poly,
};
pub use cauchy::{
    c_aux_poly, c_aux_poly_l, cauchy, cauchy_coefficient, cauchy_derivative, cauchy_number,
    cauchy_poly, cauchy_recurrence_step, multiparam_cauchy, CauchyKind, Construction, MultiParam,
};
pub use error::{Error, Result};
pub use exact::{binom, binom_scalar, factorial, int, parse_rational, q, rat, Rational};
pub use harmonic::{harmonic_number, harmonic_poly, hyperharmonic_poly};
pub use poly::{BiPoly, Polynomial, RatPoly, Ring};
pub use series::TruncatedSeries;
pub use stirling::{
    central_u, gsn1, gsn2, lah, stirling1, stirling2, StirlingKind, TriangleCache, TriangleKind,
};
