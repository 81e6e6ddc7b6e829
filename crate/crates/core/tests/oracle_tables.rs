//! Values frozen from a separate brute-force implementation (plain recursive
//! enumeration with a two-sided running-maximum flood fill), compared against
//! every route in the crate.

use num_bigint::BigInt;

use watercap::algebra::{Monomial, TriPoly};
use watercap::bijections::marked_sets;
use watercap::brute;
use watercap::closed_forms::{self, ClosedForms};
use watercap::enumerate::enumerate_d;
use watercap::genfunc;
use watercap::recurrences::{b_seq_rec3, b_seq_rec4, bpq_seq, d_seq_rec1, d_seq_rec2};
use watercap::Composition;

const HISTOGRAMS: &[&[u64]] = &[
    &[1],
    &[1],
    &[2],
    &[3],
    &[5],
    &[7, 1],
    &[10, 2, 1],
    &[13, 5, 2, 1],
    &[17, 8, 6, 2, 1],
    &[21, 14, 10, 7, 2, 1],
    &[26, 20, 20, 12, 8, 2, 1],
    &[31, 30, 30, 27, 14, 9, 2, 1],
    &[37, 40, 50, 42, 35, 16, 10, 2, 1],
    &[43, 55, 70, 77, 56, 44, 18, 11, 2, 1],
    &[50, 70, 105, 112, 112, 72, 54, 20, 12, 2, 1],
    &[57, 91, 140, 182, 168, 156, 90, 65, 22, 13, 2, 1],
    &[65, 112, 196, 252, 294, 240, 210, 110, 77, 24, 14, 2, 1],
];

const TOTAL_CAPACITY: [u64; 21] = [
    0, 0, 0, 0, 0, 1, 4, 12, 30, 68, 144, 291, 568, 1080, 2012, 3688, 6672, 11941, 21180, 37284,
    65210,
];

const SIGN_BALANCE: [i64; 21] = [
    1, 1, 2, 3, 5, 6, 9, 9, 14, 11, 21, 10, 33, 1, 58, -29, 117, -114, 265, -343, 646,
];

const NO_WATER: [u64; 21] = [
    1, 1, 2, 3, 5, 7, 10, 13, 17, 21, 26, 31, 37, 43, 50, 57, 65, 73, 82, 91, 101,
];

const D_COUNTS: [u64; 17] = [
    1, 1, 2, 3, 5, 7, 11, 15, 23, 31, 47, 63, 95, 127, 191, 255, 383,
];

const COLORED_P2: [u64; 15] = [
    0, 0, 0, 0, 0, 2, 16, 84, 360, 1366, 4776, 15744, 49648, 151242, 448160,
];

const COLORED_P3: [u64; 15] = [
    0, 0, 0, 0, 0, 3, 36, 276, 1710, 9324, 46656, 219441, 984888, 4261128, 17899740,
];

/// `(cap, tau, sigma, count)` over `B_7`.
const TRIVARIATE_7: &[(u32, u32, u32, u64)] = &[
    (0, 1, 9, 1),
    (0, 1, 12, 1),
    (0, 3, 4, 1),
    (0, 3, 6, 1),
    (0, 3, 8, 1),
    (0, 3, 10, 1),
    (0, 5, 1, 1),
    (0, 5, 2, 1),
    (0, 5, 3, 1),
    (0, 5, 4, 1),
    (0, 5, 5, 1),
    (0, 5, 6, 1),
    (0, 7, 0, 1),
    (1, 1, 10, 1),
    (1, 1, 11, 1),
    (1, 3, 5, 1),
    (1, 3, 7, 1),
    (1, 3, 9, 1),
    (2, 3, 6, 1),
    (2, 3, 8, 1),
    (3, 3, 7, 1),
];

/// Nonzero `(n, k, j, count)` for `n <= 12`.
const REFINED: &[(u64, u64, u64, u64)] = &[
    (0, 0, 0, 1),
    (1, 0, 1, 1),
    (2, 0, 0, 1),
    (2, 0, 2, 1),
    (3, 0, 1, 2),
    (3, 0, 3, 1),
    (4, 0, 0, 1),
    (4, 0, 2, 3),
    (4, 0, 4, 1),
    (5, 0, 1, 2),
    (5, 0, 3, 4),
    (5, 0, 5, 1),
    (5, 1, 1, 1),
    (6, 0, 0, 1),
    (6, 0, 2, 3),
    (6, 0, 4, 5),
    (6, 0, 6, 1),
    (6, 1, 2, 2),
    (6, 2, 2, 1),
    (7, 0, 1, 2),
    (7, 0, 3, 4),
    (7, 0, 5, 6),
    (7, 0, 7, 1),
    (7, 1, 1, 2),
    (7, 1, 3, 3),
    (7, 2, 3, 2),
    (7, 3, 3, 1),
    (8, 0, 0, 1),
    (8, 0, 2, 3),
    (8, 0, 4, 5),
    (8, 0, 6, 7),
    (8, 0, 8, 1),
    (8, 1, 2, 4),
    (8, 1, 4, 4),
    (8, 2, 2, 3),
    (8, 2, 4, 3),
    (8, 3, 4, 2),
    (8, 4, 4, 1),
    (9, 0, 1, 2),
    (9, 0, 3, 4),
    (9, 0, 5, 6),
    (9, 0, 7, 8),
    (9, 0, 9, 1),
    (9, 1, 1, 3),
    (9, 1, 3, 6),
    (9, 1, 5, 5),
    (9, 2, 3, 6),
    (9, 2, 5, 4),
    (9, 3, 3, 4),
    (9, 3, 5, 3),
    (9, 4, 5, 2),
    (9, 5, 5, 1),
    (10, 0, 0, 1),
    (10, 0, 2, 3),
    (10, 0, 4, 5),
    (10, 0, 6, 7),
    (10, 0, 8, 9),
    (10, 0, 10, 1),
    (10, 1, 2, 6),
    (10, 1, 4, 8),
    (10, 1, 6, 6),
    (10, 2, 2, 6),
    (10, 2, 4, 9),
    (10, 2, 6, 5),
    (10, 3, 4, 8),
    (10, 3, 6, 4),
    (10, 4, 4, 5),
    (10, 4, 6, 3),
    (10, 5, 6, 2),
    (10, 6, 6, 1),
    (11, 0, 1, 2),
    (11, 0, 3, 4),
    (11, 0, 5, 6),
    (11, 0, 7, 8),
    (11, 0, 9, 10),
    (11, 0, 11, 1),
    (11, 1, 1, 4),
    (11, 1, 3, 9),
    (11, 1, 5, 10),
    (11, 1, 7, 7),
    (11, 2, 3, 12),
    (11, 2, 5, 12),
    (11, 2, 7, 6),
    (11, 3, 3, 10),
    (11, 3, 5, 12),
    (11, 3, 7, 5),
    (11, 4, 5, 10),
    (11, 4, 7, 4),
    (11, 5, 5, 6),
    (11, 5, 7, 3),
    (11, 6, 7, 2),
    (11, 7, 7, 1),
    (12, 0, 0, 1),
    (12, 0, 2, 3),
    (12, 0, 4, 5),
    (12, 0, 6, 7),
    (12, 0, 8, 9),
    (12, 0, 10, 11),
    (12, 0, 12, 1),
    (12, 1, 2, 8),
    (12, 1, 4, 12),
    (12, 1, 6, 12),
    (12, 1, 8, 8),
    (12, 2, 2, 10),
    (12, 2, 4, 18),
    (12, 2, 6, 15),
    (12, 2, 8, 7),
    (12, 3, 4, 20),
    (12, 3, 6, 16),
    (12, 3, 8, 6),
    (12, 4, 4, 15),
    (12, 4, 6, 15),
    (12, 4, 8, 5),
    (12, 5, 6, 12),
    (12, 5, 8, 4),
    (12, 6, 6, 7),
    (12, 6, 8, 3),
    (12, 7, 8, 2),
    (12, 8, 8, 1),
];

/// General compositions with their capacity.
const FLOOD: &[(&[u32], u64)] = &[
    (&[3, 1, 2], 1),
    (&[4, 1, 1, 3], 4),
    (&[2, 5, 1, 3, 1, 4], 7),
    (&[1, 3, 2, 4, 1, 3, 1, 4, 5, 2, 2, 1], 8),
    (&[5], 0),
    (&[1, 2, 3, 2, 1], 0),
    (&[3, 1, 3], 2),
    (&[6, 1, 1, 1, 6], 15),
];

const SIGMA: &[(&str, u64)] = &[
    ("212", 5),
    ("222", 9),
    ("112", 3),
    ("211212", 14),
    ("221112", 12),
    ("12121", 7),
];

const MARKED: &[(u32, u64, u64)] = &[
    (3, 5, 5),
    (4, 10, 10),
    (5, 20, 19),
    (6, 38, 34),
    (7, 71, 59),
    (8, 130, 100),
    (9, 235, 167),
    (10, 420, 276),
    (11, 744, 453),
    (12, 1308, 740),
    (13, 2285, 1205),
    (14, 3970, 1958),
];

#[test]
fn histograms() {
    let r3 = b_seq_rec3(16);
    let r4 = b_seq_rec4(16);
    let f = genfunc::gf_f(16).unwrap();
    for (n, h) in HISTOGRAMS.iter().enumerate() {
        let mut expect = TriPoly::zero();
        for (k, &c) in h.iter().enumerate() {
            expect.add_term(Monomial::new(k as u32, 0, 0), BigInt::from(c));
        }
        assert_eq!(
            brute::capacity_histogram(n as u32)[..h.len()],
            h[..],
            "n = {n}"
        );
        assert_eq!(r3[n], expect, "n = {n}");
        assert_eq!(r4[n], expect, "n = {n}");
        assert_eq!(f.coeff(n), &expect, "n = {n}");
        if n >= 5 {
            for k in 1..=n - 4 {
                let w = closed_forms::wnk(n as u64, k as u64).unwrap();
                assert_eq!(
                    w,
                    BigInt::from(h.get(k).copied().unwrap_or(0)),
                    "w({n},{k})"
                );
            }
        }
    }
}

#[test]
fn sums_over_b_n() {
    let cf = ClosedForms::standard();
    for n in 0..=20u64 {
        let i = n as usize;
        assert_eq!(
            cf.total_capacity(n).unwrap(),
            BigInt::from(TOTAL_CAPACITY[i]),
            "n = {n}"
        );
        assert_eq!(
            cf.sign_balance(n).unwrap(),
            BigInt::from(SIGN_BALANCE[i]),
            "n = {n}"
        );
        assert_eq!(cf.w0(n), BigInt::from(NO_WATER[i]), "n = {n}");
    }
}

#[test]
fn d_counts() {
    let r1 = d_seq_rec1(16);
    let r2 = d_seq_rec2(16);
    let gf = genfunc::gf_d(16).unwrap();
    for (n, &d) in D_COUNTS.iter().enumerate() {
        let d = BigInt::from(d);
        assert_eq!(BigInt::from(enumerate_d(n as u32).len()), d);
        assert_eq!(r1[n], d);
        assert_eq!(r2[n], d);
        assert_eq!(gf.coeff(n).eval_int(0, 0, 0), d);
    }
}

#[test]
fn colored() {
    let cf = ClosedForms::standard();
    for n in 0..15u64 {
        let i = n as usize;
        assert_eq!(
            cf.total_capacity_colored(n, 2).unwrap(),
            BigInt::from(COLORED_P2[i])
        );
        assert_eq!(
            cf.total_capacity_colored(n, 3).unwrap(),
            BigInt::from(COLORED_P3[i])
        );
        assert_eq!(
            brute::colored_total_capacity(n as u32, 3),
            BigInt::from(COLORED_P3[i])
        );
    }
}

#[test]
fn trivariate_seven() {
    let mut expect = TriPoly::zero();
    for &(cap, tau, sigma, count) in TRIVARIATE_7 {
        expect.add_term(Monomial::new(cap, tau, sigma), BigInt::from(count));
    }
    assert_eq!(brute::trivariate_polynomial(7), expect);
    assert_eq!(bpq_seq(7).full[7], expect);
    assert_eq!(genfunc::gf_fpq(7).coeff(7), &expect);
}

#[test]
fn refined_counts() {
    let cf = ClosedForms::standard();
    let mut nonzero = 0;
    for n in 0..=12u64 {
        for j in (n % 2..=n).step_by(2) {
            for k in 0..=n {
                let expect = REFINED
                    .iter()
                    .find(|r| (r.0, r.1, r.2) == (n, k, j))
                    .map_or(0, |r| r.3);
                let got = cf.bnkj(n, k, j).unwrap();
                assert_eq!(got, BigInt::from(expect), "({n},{k},{j})");
                nonzero += usize::from(expect > 0);
            }
        }
    }
    assert_eq!(nonzero, REFINED.len());
}

#[test]
fn flood_fill_on_general_compositions() {
    for &(parts, cap) in FLOOD {
        let c = Composition::new(parts.to_vec()).unwrap();
        assert_eq!(c.capacity(), cap, "{c}");
    }
}

#[test]
fn sigma_values() {
    for &(s, sigma) in SIGMA {
        let c: Composition = s.parse().unwrap();
        assert_eq!(c.sigma(), Some(sigma), "{s}");
    }
}

#[test]
fn marked_compositions() {
    let cf = ClosedForms::standard();
    for &(n, star, outside) in MARKED {
        assert_eq!(marked_sets(n), (star, outside), "n = {n}");
        let (conv, closed) = cf.marked_identity(n as u64).unwrap();
        assert_eq!(conv, BigInt::from(star));
        assert_eq!(closed, BigInt::from(star));
    }
}
