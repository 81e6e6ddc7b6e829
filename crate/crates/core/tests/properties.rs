use num_bigint::BigInt;
use proptest::prelude::*;

use watercap::bijections::{
    d_rec1_map, d_rec2_map, decode_bnk, encode_bnk, involution_map, DOp, FixedClass, StepKind,
};
use watercap::closed_forms::{fib, fib_fast_doubling};
use watercap::Composition;

fn binary(max_len: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=2, 0..max_len).prop_map(|v| Composition::new(v).unwrap())
}

fn general(max_len: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=6, 0..max_len).prop_map(|v| Composition::new(v).unwrap())
}

fn in_d(c: &Composition) -> bool {
    let p = c.parts();
    p.len() < 3 || p[1..p.len() - 1].iter().all(|x| x % 2 == 0)
}

/// Compositions with even internal parts.
fn d_member(max_len: usize) -> impl Strategy<Value = Composition> {
    (
        1u32..=5,
        prop::collection::vec(1u32..=3, 0..max_len),
        1u32..=5,
    )
        .prop_map(|(a, mid, z)| {
            let mut parts = vec![a];
            parts.extend(mid.into_iter().map(|m| 2 * m));
            parts.push(z);
            Composition::new(parts).unwrap()
        })
}

proptest! {
    #[test]
    fn binary_capacity_is_ones_between_outer_twos(c in binary(40)) {
        prop_assert_eq!(c.capacity(), c.ones_between_outer_twos());
    }

    #[test]
    fn capacity_is_reversal_invariant(c in general(30)) {
        let rev = Composition::new(c.parts().iter().rev().copied().collect()).unwrap();
        prop_assert_eq!(c.capacity(), rev.capacity());
    }

    #[test]
    fn capacity_bounded_by_cells(c in general(30)) {
        let max = c.parts().iter().copied().max().unwrap_or(0) as u64;
        let cells: u64 = c.parts().len() as u64 * max - u64::from(c.n());
        prop_assert!(c.capacity() <= cells);
    }

    #[test]
    fn stats_are_consistent(c in binary(40)) {
        let s = c.stats();
        prop_assert_eq!(s.tau + 2 * s.mu, u64::from(c.n()));
        prop_assert_eq!(s.sign == 1, s.capacity % 2 == 0);
        prop_assert!(s.sigma.is_some());
    }

    #[test]
    fn display_parse_roundtrip(c in general(20)) {
        let back: Composition = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn bnk_codec_roundtrip(c in binary(40)) {
        if c.capacity() > 0 {
            let code = encode_bnk(&c).unwrap();
            prop_assert_eq!(code.a.len() as u64, c.capacity() + 1);
            let back = decode_bnk(c.n(), c.capacity() as u32, &code).unwrap();
            prop_assert_eq!(back, c);
        } else {
            prop_assert!(encode_bnk(&c).is_err());
        }
    }

    #[test]
    fn involution_law(c in binary(40)) {
        if !c.in_k().unwrap() {
            prop_assert!(involution_map(&c).is_err());
            return Ok(());
        }
        let step = involution_map(&c).unwrap();
        match step.kind {
            StepKind::Fixed => {
                prop_assert!(step.partner.is_none());
                prop_assert_ne!(step.fixed_class, FixedClass::None);
            }
            _ => {
                let partner = step.partner.clone().unwrap();
                prop_assert_eq!(partner.n(), c.n());
                prop_assert!(partner.in_k().unwrap());
                prop_assert_eq!(partner.stats().sign, -step.sign);
                let back = involution_map(&partner).unwrap();
                prop_assert_eq!(back.kind, step.kind);
                prop_assert_eq!(back.partner, Some(c));
            }
        }
    }

    #[test]
    fn d_maps_stay_in_d(c in d_member(8), two in any::<bool>()) {
        let op = if two { DOp::Two } else { DOp::One };
        let image = d_rec2_map(&c, op).unwrap();
        prop_assert_eq!(image.n(), c.n() + 2);
        prop_assert!(in_d(&image));
        let other = d_rec2_map(&c, if two { DOp::One } else { DOp::Two }).unwrap();
        prop_assert_ne!(&image, &other);
        if c.len() >= 2 && c.parts().last() == Some(&1) {
            let image = d_rec1_map(&c, op).unwrap();
            prop_assert_eq!(image.n(), c.n() + 2);
            prop_assert!(in_d(&image));
            prop_assert_eq!(image.parts().last(), Some(&1));
        }
    }

    #[test]
    fn fibonacci_routes_agree(n in 0u64..2000) {
        prop_assert_eq!(fib(n as i64).unwrap(), fib_fast_doubling(n));
    }

    #[test]
    fn fibonacci_negative_extension(n in 0i64..60) {
        // f_{-n-2} = (-1)^n f_n
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(fib(-n - 2).unwrap(), fib(n).unwrap() * BigInt::from(sign));
    }
}
