//! Data-parallel batch evaluation.
//!
//! With the `parallel` feature (on by default) batches are spread over the
//! rayon thread pool; without it the same functions run sequentially. Output
//! order always matches input order.

use crate::cauchy::{cauchy, CauchyKind};
use crate::poly::RatPoly;

/// Maps `f` over `items`, in parallel when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    seq_map(items, f)
}

/// Sequential counterpart of [`par_map`], always available for comparison.
pub fn seq_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Canonical poly-Cauchy polynomials for a batch of `(kind, n, k)` triples.
///
/// # Panics
/// Panics when any `k == 0`.
pub fn cauchy_batch(specs: &[(CauchyKind, usize, usize)]) -> Vec<RatPoly> {
    par_map(specs, |&(kind, n, k)| cauchy(kind, n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batch_preserves_order() {
        let specs: Vec<_> = (0..10)
            .flat_map(|n| [(CauchyKind::First, n, 1), (CauchyKind::Second, n, 2)])
            .collect();
        let out = cauchy_batch(&specs);
        for (spec, p) in specs.iter().zip(&out) {
            assert_eq!(*p, cauchy(spec.0, spec.1, spec.2));
        }
        assert_eq!(par_map(&[1, 2, 3], |v| v * 2), seq_map(&[1, 2, 3], |v| v * 2));
    }
}
