//! The identity registry, split by topic. Every check builds both sides
//! from the library and compares them exactly.

use crate::case::IdentityCase;

mod bernoulli;
mod binomial;
mod derivative;
mod harmonic;
mod multi;
mod poly;
mod stirling;
mod util;

pub(crate) fn build() -> Vec<IdentityCase> {
    let mut v = Vec::new();
    v.extend(stirling::cases());
    v.extend(binomial::cases());
    v.extend(derivative::cases());
    v.extend(harmonic::cases());
    v.extend(bernoulli::cases());
    v.extend(poly::cases());
    v.extend(multi::cases());
    v.sort_by_key(|c| c.group());
    for g in 1..=22u8 {
        assert!(v.iter().any(|c| c.group() == g), "identity group G{g:02} is empty");
    }
    v
}
