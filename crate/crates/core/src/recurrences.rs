//! Sequence builders driven purely by recurrences.
//!
//! Nothing here calls into [`crate::closed_forms`]; the only outside input is
//! the seed `d(0..=3)`, which is counted from [`crate::enumerate::enumerate_d`].

use std::ops::Index;

use num_bigint::BigInt;

use crate::algebra::{Monomial, TriPoly};
use crate::enumerate::enumerate_d;

/// Polynomials indexed `0..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolySeq(Vec<TriPoly>);

impl PolySeq {
    pub fn get(&self, n: usize) -> Option<&TriPoly> {
        self.0.get(n)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TriPoly> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<TriPoly> {
        self.0
    }
}

impl Index<usize> for PolySeq {
    type Output = TriPoly;

    fn index(&self, n: usize) -> &TriPoly {
        &self.0[n]
    }
}

impl From<Vec<TriPoly>> for PolySeq {
    fn from(v: Vec<TriPoly>) -> Self {
        PolySeq(v)
    }
}

fn c(v: i64) -> TriPoly {
    TriPoly::constant(v)
}

/// `b_0..=b_max` from the third-order recurrence
/// `b_n = (1+y) b_{n-1} + (1-y) b_{n-2} - b_{n-3} + 1 - y` for `n >= 3`,
/// seeded with `b_0 = b_1 = 1`, `b_2 = 2`.
pub fn b_seq_rec3(max: usize) -> PolySeq {
    let y = TriPoly::y();
    let one_plus_y = &c(1) + &y;
    let one_minus_y = &c(1) - &y;
    let mut seq = vec![c(1), c(1), c(2)];
    for n in 3..=max {
        let next = &(&(&one_plus_y * &seq[n - 1]) + &(&one_minus_y * &seq[n - 2])) - &seq[n - 3];
        seq.push(&next + &one_minus_y);
    }
    seq.truncate(max + 1);
    PolySeq(seq)
}

/// `b_0..=b_max` from the fourth-order homogeneous recurrence
/// `b_n = (2+y) b_{n-1} - 2y b_{n-2} - (2-y) b_{n-3} + b_{n-4}` for `n >= 4`,
/// seeded with `1, 1, 2, 3`.
pub fn b_seq_rec4(max: usize) -> PolySeq {
    let y = TriPoly::y();
    let a1 = &c(2) + &y;
    let a2 = &c(-2) * &y;
    let a3 = &c(2) - &y;
    let mut seq = vec![c(1), c(1), c(2), c(3)];
    for n in 4..=max {
        let next =
            &(&(&(&a1 * &seq[n - 1]) + &(&a2 * &seq[n - 2])) - &(&a3 * &seq[n - 3])) + &seq[n - 4];
        seq.push(next);
    }
    seq.truncate(max + 1);
    PolySeq(seq)
}

/// Trivariate distribution split by final part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BpqSeq {
    /// `sum p^tau q^sigma y^cap` over `B_n`.
    pub full: PolySeq,
    /// Restricted to members ending in 1.
    pub ends_in_one: PolySeq,
    /// Restricted to members ending in 2.
    pub ends_in_two: PolySeq,
}

/// Builds the trivariate distributions from
/// `b1_n = p b_{n-1}` and
/// `b2_n = p^{n-2} q^{n-1} + sum_{j=2}^{n-2} (py)^{j-2} q^{n-1} b2_{n-j}`.
pub fn bpq_seq(max: usize) -> BpqSeq {
    let mut full = vec![TriPoly::one()];
    let mut ones = vec![TriPoly::zero()];
    let mut twos = vec![TriPoly::zero()];
    for n in 1..=max {
        let one = full[n - 1].mul_monomial(Monomial::new(0, 1, 0));
        let two = if n < 2 {
            TriPoly::zero()
        } else {
            let mut acc = TriPoly::monomial(Monomial::new(0, n as u32 - 2, n as u32 - 1));
            for j in 2..=n - 2 {
                let shift = Monomial::new(j as u32 - 2, j as u32 - 2, n as u32 - 1);
                acc += &twos[n - j].mul_monomial(shift);
            }
            acc
        };
        full.push(&one + &two);
        ones.push(one);
        twos.push(two);
    }
    BpqSeq {
        full: PolySeq(full),
        ends_in_one: PolySeq(ones),
        ends_in_two: PolySeq(twos),
    }
}

fn d_seeds() -> [BigInt; 4] {
    [0, 1, 2, 3].map(|n| BigInt::from(enumerate_d(n).len()))
}

/// `d(0..=max)` from `d(n) = d(n-1) + 2 d(n-2) - 2 d(n-3)`, `n >= 4`.
pub fn d_seq_rec1(max: usize) -> Vec<BigInt> {
    let mut seq = d_seeds().to_vec();
    for n in 4..=max {
        let next = &seq[n - 1] + &seq[n - 2] * 2 - &seq[n - 3] * 2;
        seq.push(next);
    }
    seq.truncate(max + 1);
    seq
}

/// `d(0..=max)` from `d(n) = 2 d(n-2) + 1`, `n >= 3`.
pub fn d_seq_rec2(max: usize) -> Vec<BigInt> {
    let mut seq = d_seeds()[..3].to_vec();
    for n in 3..=max {
        let next = &seq[n - 2] * 2 + 1;
        seq.push(next);
    }
    seq.truncate(max + 1);
    seq
}
