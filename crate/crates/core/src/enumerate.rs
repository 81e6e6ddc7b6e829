//! Exhaustive enumerators.
//!
//! [`BinaryCompositions`] streams `B_n` (parts in `{1, 2}`) in lexicographic
//! order with `1 < 2`, optionally restricted to a fixed prefix so that the
//! stream can be split across workers. [`enumerate_d`] lists the compositions
//! whose internal parts are even.

use crate::composition::Composition;

/// Lexicographic stream of the compositions of `n` with parts in `{1, 2}`.
#[derive(Debug, Clone)]
pub struct BinaryCompositions {
    prefix_len: usize,
    next: Option<Vec<u32>>,
}

/// All of `B_n`, lexicographically. `B_0` holds only the empty composition.
pub fn enumerate_b(n: u32) -> BinaryCompositions {
    BinaryCompositions {
        prefix_len: 0,
        next: Some(vec![1; n as usize]),
    }
}

/// The members of `B_n` that begin with `prefix`, lexicographically.
///
/// Yields nothing when `prefix` contains a part other than 1 or 2 or sums to
/// more than `n`.
pub fn enumerate_b_with_prefix(n: u32, prefix: &[u32]) -> BinaryCompositions {
    let used: u32 = prefix.iter().sum();
    let valid = used <= n && prefix.iter().all(|&p| p == 1 || p == 2);
    let next = valid.then(|| {
        let mut start = prefix.to_vec();
        start.extend(std::iter::repeat_n(1, (n - used) as usize));
        start
    });
    BinaryCompositions {
        prefix_len: prefix.len(),
        next,
    }
}

impl Iterator for BinaryCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        self.next = successor(&current, self.prefix_len);
        Some(Composition::from_positive(current))
    }
}

/// Lexicographic successor inside `B_n`, never touching the first `frozen`
/// parts. The rightmost 1 that is not the final part becomes a 2 and the
/// remainder is refilled with 1s.
fn successor(parts: &[u32], frozen: usize) -> Option<Vec<u32>> {
    let mut tail_sum = 0u32;
    for i in (frozen..parts.len()).rev() {
        tail_sum += parts[i];
        if parts[i] == 1 && tail_sum >= 2 {
            let mut next = parts[..i].to_vec();
            next.push(2);
            next.extend(std::iter::repeat_n(1, (tail_sum - 2) as usize));
            return Some(next);
        }
    }
    None
}

/// Prefixes that partition `B_n`: every binary sequence whose sum first
/// reaches at least `depth` at its final part (clamped to `n`). Each member of
/// `B_n` extends exactly one of them.
pub fn split_prefixes(n: u32, depth: u32) -> Vec<Vec<u32>> {
    let depth = depth.min(n);
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0u32)];
    while let Some((prefix, sum)) = stack.pop() {
        if sum >= depth {
            if sum <= n {
                out.push(prefix);
            }
            continue;
        }
        for part in [2u32, 1] {
            let mut p = prefix.clone();
            p.push(part);
            stack.push((p, sum + part));
        }
    }
    out.sort();
    out
}

/// `D_n`: compositions of `n` whose internal parts (all but the first and the
/// last) are even, in lexicographic order. `D_0` is the empty composition.
pub fn enumerate_d(n: u32) -> Vec<Composition> {
    fn tail(rem: u32, acc: &mut Vec<u32>, out: &mut Vec<Composition>) {
        for part in 1..=rem {
            acc.push(part);
            if part == rem {
                out.push(Composition::from_positive(acc.clone()));
            } else if part % 2 == 0 {
                tail(rem - part, acc, out);
            }
            acc.pop();
        }
    }

    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    for first in 1..=n {
        acc.push(first);
        if first == n {
            out.push(Composition::from_positive(acc.clone()));
        } else {
            tail(n - first, &mut acc, &mut out);
        }
        acc.pop();
    }
    out
}

/// Every composition of `n` (all `2^(n-1)` of them), in no particular order.
/// Meant for small oracle checks; `n` must be below 32.
pub fn all_compositions(n: u32) -> impl Iterator<Item = Composition> {
    assert!(n < 32, "all_compositions is limited to n < 32");
    let masks = if n == 0 { 1u32 } else { 1u32 << (n - 1) };
    (0..masks).map(move |mask| {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut run = 1u32;
        for bit in 0..n - 1 {
            if mask & (1 << bit) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        Composition::from_positive(parts)
    })
}
