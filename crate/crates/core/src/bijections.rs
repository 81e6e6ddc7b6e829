//! Counting arguments turned into executable maps.
//!
//! * [`encode_bnk`] / [`decode_bnk`]: members of `B_{n,k}` as
//!   `1^x 2^{a_0} 1 2^{a_1} 1 ... 1 2^{a_k} 1^y`.
//! * [`involution_map`]: the two-stage sign-reversing involution on `K_n`.
//! * [`d_rec1_map`], [`d_rec2_map`]: the constructions behind the two
//!   recurrences for `d(n)`.
//! * [`marked_sets`]: exhaustive counts of marked compositions.

use num_bigint::BigInt;
use thiserror::Error;

use crate::composition::{Composition, CompositionError};
use crate::enumerate::enumerate_b;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{composition} is not in {domain}")]
    NotInDomain { domain: String, composition: String },
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("unsupported size n = {0}")]
    BadSize(u32),
    #[error(transparent)]
    Composition(#[from] CompositionError),
}

fn not_in(domain: impl Into<String>, c: &Composition) -> BijectionError {
    BijectionError::NotInDomain {
        domain: domain.into(),
        composition: c.to_string(),
    }
}

fn build(parts: Vec<u32>) -> Composition {
    Composition::new(parts).expect("maps only produce positive parts")
}

fn leading_ones(parts: &[u32]) -> usize {
    parts.iter().take_while(|&&p| p == 1).count()
}

fn trailing_ones(parts: &[u32]) -> usize {
    parts.iter().rev().take_while(|&&p| p == 1).count()
}

/// Run lengths of a member of `B_{n,k}`, `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BnkCode {
    pub x: u32,
    pub y: u32,
    /// `a_0, ..., a_k` with `a_0, a_k >= 1`.
    pub a: Vec<u32>,
}

impl BnkCode {
    /// `r` with `sum a_i = r + 1`.
    pub fn r(&self) -> u32 {
        self.a.iter().sum::<u32>() - 1
    }
}

pub fn encode_bnk(c: &Composition) -> Result<BnkCode, BijectionError> {
    if !c.is_binary() {
        return Err(CompositionError::NotBinary(c.to_string()).into());
    }
    if c.capacity() == 0 {
        return Err(not_in("B_{n,k} with k >= 1", c));
    }
    let parts = c.parts();
    let x = leading_ones(parts);
    let y = trailing_ones(parts);
    let middle = &parts[x..parts.len() - y];
    let mut a = vec![0u32];
    for &part in middle {
        match part {
            2 => *a.last_mut().unwrap() += 1,
            _ => a.push(0),
        }
    }
    Ok(BnkCode {
        x: x as u32,
        y: y as u32,
        a,
    })
}

pub fn decode_bnk(n: u32, k: u32, code: &BnkCode) -> Result<Composition, BijectionError> {
    let a = &code.a;
    if k == 0 || a.len() != k as usize + 1 {
        return Err(BijectionError::InvalidCode(format!(
            "expected {} run lengths for k = {k}, got {}",
            k as usize + 1,
            a.len()
        )));
    }
    if a[0] == 0 || a[k as usize] == 0 {
        return Err(BijectionError::InvalidCode(
            "outer runs of 2s must be nonempty".into(),
        ));
    }
    let weight = code.x as u64 + code.y as u64 + 2 * a.iter().map(|&v| v as u64).sum::<u64>();
    if weight + k as u64 != n as u64 {
        return Err(BijectionError::InvalidCode(format!(
            "x + y + 2 sum a = {weight}, expected n - k = {}",
            n as i64 - k as i64
        )));
    }
    let mut parts = vec![1; code.x as usize];
    for (i, &run) in a.iter().enumerate() {
        if i > 0 {
            parts.push(1);
        }
        parts.extend(std::iter::repeat_n(2, run as usize));
    }
    parts.extend(std::iter::repeat_n(1, code.y as usize));
    Ok(build(parts))
}

/// Every valid code for `B_{n,k}`.
pub fn all_bnk_codes(n: u32, k: u32) -> Vec<BnkCode> {
    fn runs(slots: usize, total: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == slots {
            if total == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let last = acc.len() + 1 == slots;
        let lo = u32::from(acc.is_empty() || last);
        if last {
            if total >= lo {
                acc.push(total);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for v in lo..=total {
            acc.push(v);
            runs(slots, total - v, acc, out);
            acc.pop();
        }
    }

    let mut codes = Vec::new();
    if k == 0 || k > n {
        return codes;
    }
    let room = n - k;
    for twos in 2..=room / 2 {
        let mut seqs = Vec::new();
        runs(k as usize + 1, twos, &mut Vec::new(), &mut seqs);
        let rest = room - 2 * twos;
        for a in seqs {
            for x in 0..=rest {
                codes.push(BnkCode {
                    x,
                    y: rest - x,
                    a: a.clone(),
                });
            }
        }
    }
    codes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    Stage1,
    Stage2,
    Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedClass {
    /// `2 1 2 1^{n-5}`.
    Rho,
    /// `2 beta 1 1 2` with `beta` in `B_{n-6}`.
    TerminalDoubleOne,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionStep {
    pub kind: StepKind,
    pub partner: Option<Composition>,
    pub fixed_class: FixedClass,
    /// `(-1)^cap` of the input.
    pub sign: i8,
}

/// `c = 1^x 2 alpha 2 1^y` with maximal `x`, `y`.
struct KDecomposition<'a> {
    x: usize,
    alpha: &'a [u32],
    y: usize,
}

fn decompose_k(c: &Composition) -> Result<KDecomposition<'_>, BijectionError> {
    if !c.in_k()? {
        return Err(not_in("K_n", c));
    }
    let parts = c.parts();
    let x = leading_ones(parts);
    let y = trailing_ones(parts);
    Ok(KDecomposition {
        x,
        alpha: &parts[x + 1..parts.len() - y - 1],
        y,
    })
}

fn assemble(x: usize, alpha: &[u32], y: usize) -> Composition {
    let mut parts = vec![1; x];
    parts.push(2);
    parts.extend_from_slice(alpha);
    parts.push(2);
    parts.extend(std::iter::repeat_n(1, y));
    build(parts)
}

/// One application of the involution on `K_n`.
///
/// Stage 1 moves a 1 between the leading run and the end of `alpha`. Its
/// survivors `2 (alpha' 1) 2 1^y` are paired in stage 2 by trading `2 1`
/// for `1 1` and one trailing 1.
pub fn involution_map(c: &Composition) -> Result<InvolutionStep, BijectionError> {
    let KDecomposition { x, alpha, y } = decompose_k(c)?;
    let sign = c.stats().sign;
    let (last, head) = alpha.split_last().expect("alpha is nonempty in K_n");
    let step = |kind, partner| InvolutionStep {
        kind,
        partner: Some(partner),
        fixed_class: FixedClass::None,
        sign,
    };
    let fixed = |class| InvolutionStep {
        kind: StepKind::Fixed,
        partner: None,
        fixed_class: class,
        sign,
    };

    if *last == 2 {
        let mut a = head.to_vec();
        a.push(1);
        return Ok(step(StepKind::Stage1, assemble(x + 1, &a, y)));
    }
    if x >= 1 {
        let mut a = head.to_vec();
        a.push(2);
        return Ok(step(StepKind::Stage1, assemble(x - 1, &a, y)));
    }
    // survivor 2 (alpha' 1) 2 1^y
    match head.split_last() {
        None => Ok(fixed(FixedClass::Rho)),
        Some((2, rest)) => {
            let mut a = rest.to_vec();
            a.extend([1, 1]);
            Ok(step(StepKind::Stage2, assemble(0, &a, y + 1)))
        }
        Some((_, rest)) if y >= 1 => {
            let mut a = rest.to_vec();
            a.extend([2, 1]);
            Ok(step(StepKind::Stage2, assemble(0, &a, y - 1)))
        }
        Some(_) => Ok(fixed(FixedClass::TerminalDoubleOne)),
    }
}

/// Members of `K_n` in lexicographic order.
pub fn enumerate_k(n: u32) -> impl Iterator<Item = Composition> {
    enumerate_b(n).filter(|c| c.in_k().unwrap_or(false))
}

/// Sum of the signs of the fixed points of [`involution_map`] on `K_n`.
pub fn knprime_signsum(n: u32) -> Result<BigInt, BijectionError> {
    if n < 5 {
        return Err(BijectionError::BadSize(n));
    }
    let mut total = 0i64;
    for c in enumerate_k(n) {
        let step = involution_map(&c)?;
        if step.kind == StepKind::Fixed {
            total += step.sign as i64;
        }
    }
    Ok(BigInt::from(total))
}

/// `c -> c -> ...` until the orbit closes, rendered with arrows.
pub fn involution_trace(c: &Composition) -> Result<String, BijectionError> {
    let step = involution_map(c)?;
    let tag = match (step.kind, step.fixed_class) {
        (StepKind::Stage1, _) => "stage1",
        (StepKind::Stage2, _) => "stage2",
        (_, FixedClass::Rho) => "fixed rho",
        _ => "fixed terminal_double_one",
    };
    Ok(match &step.partner {
        Some(p) => format!(
            "{c} -> {p} -> {c} ({tag}, cap {} <-> {})",
            c.capacity(),
            p.capacity()
        ),
        None => format!("{c} ({tag}, sign {:+})", step.sign),
    })
}

fn in_d(c: &Composition) -> bool {
    let parts = c.parts();
    parts.len() < 3 || parts[1..parts.len() - 1].iter().all(|p| p % 2 == 0)
}

/// Which of the two constructions to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DOp {
    One,
    Two,
}

impl DOp {
    pub const BOTH: [DOp; 2] = [DOp::One, DOp::Two];
}

/// `D_{n-2} -> D_n`. With last part `z`: `One` replaces `z` by `z + 2`;
/// `Two` appends a 2 when `z` is even and replaces `z` by `z + 1, 1` when odd.
pub fn d_rec2_map(c: &Composition, op: DOp) -> Result<Composition, BijectionError> {
    if c.is_empty() || !in_d(c) {
        return Err(not_in("D_m with m >= 1", c));
    }
    let mut parts = c.parts().to_vec();
    let z = parts.pop().unwrap();
    match (op, z % 2) {
        (DOp::One, _) => parts.push(z + 2),
        (DOp::Two, 0) => parts.extend([z, 2]),
        (DOp::Two, _) => parts.extend([z + 1, 1]),
    }
    Ok(build(parts))
}

/// The member of `D_n` missed by [`d_rec2_map`]: `(n-2, 2)` for odd `n`,
/// `(n-1, 1)` for even `n`.
pub fn exceptional_element(n: u32) -> Result<Composition, BijectionError> {
    if n < 3 {
        return Err(BijectionError::BadSize(n));
    }
    Ok(if n % 2 == 1 {
        build(vec![n - 2, 2])
    } else {
        build(vec![n - 1, 1])
    })
}

/// From members of `D_{n-2}` ending in 1 (with at least two parts) to members
/// of `D_n` ending in 1: `One` inserts a 2 before the terminal 1, `Two` adds
/// 2 to the penultimate part.
pub fn d_rec1_map(c: &Composition, op: DOp) -> Result<Composition, BijectionError> {
    let parts = c.parts();
    if parts.len() < 2 || parts.last() != Some(&1) || !in_d(c) {
        return Err(not_in("members of D_m ending in 1", c));
    }
    let mut out = parts.to_vec();
    match op {
        DOp::One => out.insert(out.len() - 1, 2),
        DOp::Two => {
            let k = out.len() - 2;
            out[k] += 2;
        }
    }
    Ok(build(out))
}

/// Exhaustive marked-composition counts: `(|B_n^*|, |B_n^* - B_n'|)`, where
/// any 1 may be marked in `B_n^*` and the subtracted set marks a 1 that lies
/// in the initial or terminal run (or anywhere in `1^n`).
pub fn marked_sets(n: u32) -> (u64, u64) {
    let mut star = 0u64;
    let mut outside = 0u64;
    for c in enumerate_b(n) {
        let parts = c.parts();
        let ones = c.count_of(1) as u64;
        star += ones;
        let lead = leading_ones(parts) as u64;
        outside += if lead == parts.len() as u64 {
            lead
        } else {
            lead + trailing_ones(parts) as u64
        };
    }
    (star, outside)
}
