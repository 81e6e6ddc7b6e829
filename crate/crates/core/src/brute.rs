//! Distributions computed by walking every member of `B_n`.
//!
//! These are the ground-truth routes for the cross-checks. Large `n` is split
//! by prefix and folded in parallel.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{Monomial, TriPoly};
use crate::composition::Composition;
use crate::enumerate::{enumerate_b, enumerate_b_with_prefix, split_prefixes};

/// Below this size a single sequential pass is cheaper than splitting.
const PARALLEL_THRESHOLD: u32 = 18;
const SPLIT_DEPTH: u32 = 10;

/// Folds `f` over `B_n` into per-worker accumulators combined by `merge`.
pub fn fold_b<T, F, M>(n: u32, init: impl Fn() -> T + Sync + Send, f: F, merge: M) -> T
where
    T: Send,
    F: Fn(&mut T, &Composition) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    if n < PARALLEL_THRESHOLD {
        let mut acc = init();
        for c in enumerate_b(n) {
            f(&mut acc, &c);
        }
        return acc;
    }
    split_prefixes(n, SPLIT_DEPTH)
        .into_par_iter()
        .map(|prefix| {
            let mut acc = init();
            for c in enumerate_b_with_prefix(n, &prefix) {
                f(&mut acc, &c);
            }
            acc
        })
        .reduce(&init, &merge)
}

fn add_vecs(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// `hist[k]` = number of members of `B_n` with capacity `k`.
pub fn capacity_histogram(n: u32) -> Vec<u64> {
    fold_b(
        n,
        || vec![0u64; n as usize + 1],
        |h, c| h[c.capacity() as usize] += 1,
        add_vecs,
    )
}

/// `b_n(y) = sum y^cap` over `B_n`.
pub fn capacity_polynomial(n: u32) -> TriPoly {
    histogram_to_poly(&capacity_histogram(n))
}

fn histogram_to_poly(h: &[u64]) -> TriPoly {
    let mut poly = TriPoly::zero();
    for (k, &count) in h.iter().enumerate() {
        poly.add_term(Monomial::new(k as u32, 0, 0), BigInt::from(count));
    }
    poly
}

/// `sum p^tau q^sigma y^cap` over `B_n`.
pub fn trivariate_polynomial(n: u32) -> TriPoly {
    let counts = fold_b(
        n,
        BTreeMap::<Monomial, u64>::new,
        |acc, c| {
            let s = c.stats();
            let m = Monomial::new(
                s.capacity as u32,
                s.tau as u32,
                s.sigma.expect("binary composition") as u32,
            );
            *acc.entry(m).or_default() += 1;
        },
        |mut a, b| {
            for (m, v) in b {
                *a.entry(m).or_default() += v;
            }
            a
        },
    );
    let mut poly = TriPoly::zero();
    for (m, v) in counts {
        poly.add_term(m, BigInt::from(v));
    }
    poly
}

/// `sum cap * p0^tau` over `B_n`.
pub fn colored_total_capacity(n: u32, p0: u64) -> BigInt {
    // cap and tau per member, aggregated as counts of (cap, tau) pairs
    let counts = fold_b(
        n,
        BTreeMap::<(u64, u64), u64>::new,
        |acc, c| {
            let cap = c.capacity();
            if cap > 0 {
                *acc.entry((cap, c.count_of(1) as u64)).or_default() += 1;
            }
        },
        |mut a, b| {
            for (key, v) in b {
                *a.entry(key).or_default() += v;
            }
            a
        },
    );
    let p = BigInt::from(p0);
    counts
        .into_iter()
        .map(|((cap, tau), count)| num_traits::Pow::pow(&p, tau) * (cap * count))
        .sum()
}

/// Number of members of `B_n` for each `(capacity, number of 1s)` pair.
pub fn refined_counts(n: u32) -> BTreeMap<(u64, u64), u64> {
    fold_b(
        n,
        BTreeMap::new,
        |acc, c| *acc.entry((c.capacity(), c.count_of(1) as u64)).or_default() += 1,
        |mut a, b| {
            for (key, v) in b {
                *a.entry(key).or_default() += v;
            }
            a
        },
    )
}

/// `sum y^cap` over the members of `B_n` accepted by `keep`.
pub fn weighted_subset<F>(n: u32, keep: F) -> TriPoly
where
    F: Fn(&Composition) -> bool + Sync + Send,
{
    let h = fold_b(
        n,
        || vec![0u64; n as usize + 1],
        |h, c| {
            if keep(c) {
                h[c.capacity() as usize] += 1;
            }
        },
        add_vecs,
    );
    histogram_to_poly(&h)
}
