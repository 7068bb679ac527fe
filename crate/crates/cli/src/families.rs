//! Name-to-function table for every family the CLI can print or export.

use clap::ValueEnum;
use polycauchy::stirling::whitney;
use polycauchy::{
    bernoulli_number, cauchy_number, cauchy_poly, central_u, euler_poly, gen_bernoulli_poly, harmonic_number,
    harmonic_poly, hyperharmonic_poly, lah, poly_bernoulli_gsn, poly_bernoulli_kl, power_sum_poly, stirling1,
    stirling2, CauchyKind, Construction, RatPoly, Rational, StirlingKind,
};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    First,
    Second,
}

impl From<Kind> for CauchyKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::First => CauchyKind::First,
            Kind::Second => CauchyKind::Second,
        }
    }
}

impl From<Kind> for StirlingKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::First => StirlingKind::First,
            Kind::Second => StirlingKind::Second,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Gsn,
    Integral,
    Series,
    BinomialConv,
    Bernoulli,
}

impl From<Method> for Construction {
    fn from(m: Method) -> Self {
        match m {
            Method::Gsn => Construction::Gsn,
            Method::Integral => Construction::Integral,
            Method::Series => Construction::Series,
            Method::BinomialConv => Construction::BinomialConv,
            Method::Bernoulli => Construction::Bernoulli,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Poly-Cauchy polynomials (`--kind`, `--k`, `--construction`).
    Cauchy,
    CauchyNumbers,
    /// Generalized Bernoulli polynomials of order `--k`.
    Bernoulli,
    BernoulliNumbers,
    Euler,
    PowerSum,
    /// The poly-Bernoulli polynomials built on GSNs.
    PolyBernoulli,
    /// The poly-Bernoulli polynomials with the inner binomial sum.
    PolyBernoulliKl,
    Hyperharmonic,
    Harmonic,
    HarmonicNumbers,
    Stirling1,
    Stirling2,
    Lah,
    CentralFactorial,
    /// r-Whitney numbers (`--kind`, `--m`, `--r`).
    Whitney,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Number,
    Poly,
    Triangle,
}

/// Options shared by every family; each family reads the ones it needs.
#[derive(Debug, Clone, Copy)]
pub struct Params {
    pub kind: Kind,
    pub k: usize,
    pub construction: Method,
    pub m: i64,
    pub r: i64,
}

/// One row: a number, a polynomial's coefficients, or a triangle row.
pub enum Row {
    Number(Rational),
    Poly(RatPoly),
    Triangle(Vec<Rational>),
}

impl Row {
    pub fn values(&self) -> Vec<Rational> {
        match self {
            Row::Number(v) => vec![v.clone()],
            Row::Poly(p) => p.coeffs().to_vec(),
            Row::Triangle(r) => r.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct ParamsJson {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<i64>,
}

impl Family {
    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }

    pub fn shape(self) -> Shape {
        use Family::*;
        match self {
            CauchyNumbers | BernoulliNumbers | HarmonicNumbers => Shape::Number,
            Stirling1 | Stirling2 | Lah | CentralFactorial | Whitney => Shape::Triangle,
            _ => Shape::Poly,
        }
    }

    fn uses_kind(self) -> bool {
        matches!(self, Family::Cauchy | Family::CauchyNumbers | Family::Whitney)
    }

    fn uses_k(self) -> bool {
        matches!(
            self,
            Family::Cauchy | Family::CauchyNumbers | Family::PolyBernoulli | Family::PolyBernoulliKl | Family::Bernoulli
        )
    }

    pub fn params_json(self, n: usize, p: &Params) -> ParamsJson {
        let whitney = self == Family::Whitney;
        ParamsJson {
            n,
            kind: self.uses_kind().then_some(match p.kind {
                Kind::First => "first",
                Kind::Second => "second",
            }),
            k: self.uses_k().then_some(p.k),
            m: whitney.then_some(p.m),
            r: whitney.then_some(p.r),
        }
    }

    pub fn row(self, n: usize, p: &Params) -> polycauchy::Result<Row> {
        use Family::*;
        let kind = CauchyKind::from(p.kind);
        let row = match self {
            Cauchy => Row::Poly(cauchy_poly(kind, n, p.k, p.construction.into())?),
            CauchyNumbers => Row::Number(cauchy_number(kind, n, p.k)?),
            Bernoulli => Row::Poly(gen_bernoulli_poly(n, p.k)),
            BernoulliNumbers => Row::Number(bernoulli_number(n)),
            Euler => Row::Poly(euler_poly(n)),
            PowerSum => Row::Poly(power_sum_poly(n)),
            PolyBernoulli => Row::Poly(poly_bernoulli_gsn(n, p.k)?),
            PolyBernoulliKl => Row::Poly(poly_bernoulli_kl(n, p.k)?),
            Hyperharmonic => Row::Poly(hyperharmonic_poly(n)),
            Harmonic => Row::Poly(harmonic_poly(n)),
            HarmonicNumbers => Row::Number(harmonic_number(n)),
            Stirling1 => Row::Triangle((0..=n).map(|m| stirling1(n, m)).collect()),
            Stirling2 => Row::Triangle((0..=n).map(|m| stirling2(n, m)).collect()),
            Lah => Row::Triangle((0..=n).map(|m| lah(n, m)).collect()),
            CentralFactorial => Row::Triangle((0..=n).map(|m| central_u(n, m)).collect::<Result<_, _>>()?),
            Whitney => Row::Triangle(
                (0..=n).map(|l| whitney(p.kind.into(), p.m, p.r, n, l)).collect::<Result<_, _>>()?,
            ),
        };
        Ok(row)
    }
}
