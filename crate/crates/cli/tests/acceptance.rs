//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach the console;
//! the process exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use watercap::algebra::{Monomial, TriPoly};
use watercap::bijections::knprime_signsum;
use watercap::brute;
use watercap::closed_forms::{ClosedForms, CorollaryIdentity, FormulaConstants};
use watercap::enumerate::enumerate_d;
use watercap::genfunc;
use watercap::recurrences::{b_seq_rec3, b_seq_rec4, bpq_seq, d_seq_rec1, d_seq_rec2};
use watercap::verify::{run_suite, Bounds};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same<T: PartialEq + std::fmt::Display>(what: &str, expected: &T, actual: &T) -> Outcome {
    ensure(expected == actual, || {
        format!("{what}: expected {expected}, got {actual}")
    })
}

fn suite(name: &str, bounds: &Bounds) -> Outcome {
    let r = run_suite(name, bounds, &ClosedForms::standard()).map_err(|e| e.to_string())?;
    ensure(r.pass, || {
        let f = &r.failures[0];
        format!(
            "suite {name}: {} failures, first {} expected {} got {}",
            r.failures.len(),
            f.params,
            f.expected,
            f.actual
        )
    })
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn m(y: u32, p: u32, q: u32) -> TriPoly {
    TriPoly::monomial(Monomial::new(y, p, q))
}

fn histogram_poly(h: &[u64]) -> TriPoly {
    let mut p = TriPoly::zero();
    for (k, &c) in h.iter().enumerate() {
        p.add_term(Monomial::new(k as u32, 0, 0), BigInt::from(c));
    }
    p
}

fn b6_three_routes() -> Outcome {
    let expect = TriPoly::constant(10) + TriPoly::term(2, Monomial::new(1, 0, 0)) + m(2, 0, 0);
    same("brute", &expect, &brute::capacity_polynomial(6))?;
    same("rec3", &expect, &b_seq_rec3(6)[6])?;
    same("rec4", &expect, &b_seq_rec4(6)[6])?;
    let f = genfunc::gf_f(6).map_err(|e| e.to_string())?;
    same("[x^6] F", &expect, f.coeff(6))?;
    same(
        "rendering",
        &"10 + 2y + y^2".to_string(),
        &expect.to_string(),
    )
}

fn b6_trivariate() -> Outcome {
    let expect = m(0, 0, 9)
        + m(0, 2, 4) * (TriPoly::one() + m(0, 0, 2) + m(0, 0, 4))
        + m(1, 2, 5) * (TriPoly::one() + m(0, 0, 2) + m(1, 0, 1))
        + m(0, 4, 1) * (TriPoly::one() + m(0, 0, 1) + m(0, 0, 2) + m(0, 0, 3) + m(0, 0, 4))
        + m(0, 6, 0);
    same("brute", &expect, &brute::trivariate_polynomial(6))?;
    let rec = bpq_seq(6);
    same(
        "b1 + b2 recurrences",
        &expect,
        &(&rec.ends_in_one[6] + &rec.ends_in_two[6]),
    )?;
    same("recurrence", &expect, &rec.full[6])?;
    same("[x^6] q-series", &expect, genfunc::gf_fpq(6).coeff(6))
}

fn three_way_agreement() -> Outcome {
    suite("dist3way", &Bounds::default())?;
    suite("distpq", &Bounds::default())
}

fn wnk_closed_form() -> Outcome {
    let cf = ClosedForms::standard();
    for n in 5..=28u32 {
        let h = brute::capacity_histogram(n);
        for k in 1..=n - 4 {
            let closed = cf.wnk(n as u64, k as u64).map_err(|e| e.to_string())?;
            same(
                &format!("w({n},{k})"),
                &BigInt::from(h[k as usize]),
                &closed,
            )?;
        }
    }
    same("w(5,1)", &int(1), &cf.wnk(5, 1).unwrap())?;
    same("w(9,3)", &int(7), &cf.wnk(9, 3).unwrap())
}

fn total_capacity_closed_form() -> Outcome {
    let cf = ClosedForms::standard();
    let total = |n: u64| cf.total_capacity(n).map_err(|e| e.to_string());
    for n in 0..=28u32 {
        let h = brute::capacity_histogram(n);
        let sum: BigInt = h
            .iter()
            .enumerate()
            .map(|(k, &c)| BigInt::from(c) * k)
            .sum();
        same(&format!("brute n = {n}"), &sum, &total(n as u64)?)?;
    }
    let rec = b_seq_rec3(60);
    for n in 0..=60 {
        let derivative = rec[n].d_dy().eval_int(1, 1, 1);
        same(&format!("d/dy b_n n = {n}"), &derivative, &total(n as u64)?)?;
    }
    same("n = 6", &int(4), &total(6)?)?;
    for n in 0..=4 {
        same(&format!("n = {n}"), &int(0), &total(n)?)?;
    }
    Ok(())
}

fn sign_balance_closed_form() -> Outcome {
    let cf = ClosedForms::standard();
    for n in 0..=28u32 {
        let brute = histogram_poly(&brute::capacity_histogram(n)).eval_int(-1, 0, 0);
        let closed = cf.sign_balance(n as u64).map_err(|e| e.to_string())?;
        same(&format!("b_{n}(-1)"), &brute, &closed)?;
    }
    for n in 6..=20u32 {
        let fixed = knprime_signsum(n).map_err(|e| e.to_string())?;
        let closed = cf.sign_balance(n as u64).map_err(|e| e.to_string())?;
        same(
            &format!("involution n = {n}"),
            &closed,
            &(fixed + (2 * n as i64 - 3)),
        )?;
    }
    Ok(())
}

fn d_sequence() -> Outcome {
    let cf = ClosedForms::standard();
    let r1 = d_seq_rec1(24);
    let r2 = d_seq_rec2(24);
    let gf = genfunc::gf_d(24).map_err(|e| e.to_string())?;
    for n in 0..=24usize {
        let count = BigInt::from(enumerate_d(n as u32).len());
        same(&format!("rec1 n = {n}"), &count, &r1[n])?;
        same(&format!("rec2 n = {n}"), &count, &r2[n])?;
        same(
            &format!("gf n = {n}"),
            &count,
            &gf.coeff(n).eval_int(0, 0, 0),
        )?;
        let mut diag = BigInt::from(0);
        for k in 0..=n as u64 {
            diag += if k == 0 {
                cf.w0(n as u64)
            } else {
                cf.wnk(n as u64 - k, k).map_err(|e| e.to_string())?
            };
        }
        same(&format!("diagonal n = {n}"), &count, &diag)?;
    }
    suite("d_recs", &Bounds::default())
}

fn corollary() -> Outcome {
    let cf = ClosedForms::standard();
    for which in CorollaryIdentity::ALL {
        for n in 5..=200 {
            let (lhs, rhs) = cf.corollary_sides(n, which).map_err(|e| e.to_string())?;
            same(&format!("identity {} n = {n}", which.index()), &lhs, &rhs)?;
        }
    }
    Ok(())
}

fn refined_counts() -> Outcome {
    suite("bnkj", &Bounds::default())?;
    same(
        "b(9,3,3)",
        &int(4),
        &ClosedForms::standard().bnkj(9, 3, 3).unwrap(),
    )
}

fn colored_total() -> Outcome {
    let cf = ClosedForms::standard();
    for p in 1..=3u64 {
        for n in 0..=22u32 {
            let brute = brute::colored_total_capacity(n, p);
            let closed = cf
                .total_capacity_colored(n as u64, p)
                .map_err(|e| e.to_string())?;
            same(&format!("p = {p}, n = {n}"), &brute, &closed)?;
        }
    }
    for p in 1..=3u64 {
        for n in 0..=200 {
            cf.total_capacity_colored(n, p)
                .map_err(|e| format!("p = {p}, n = {n}: {e}"))?;
        }
    }
    for n in 0..=60 {
        let plain = cf.total_capacity(n).map_err(|e| e.to_string())?;
        let colored = cf.total_capacity_colored(n, 1).map_err(|e| e.to_string())?;
        same(&format!("p = 1, n = {n}"), &plain, &colored)?;
    }
    Ok(())
}

fn fibonacci_convolution() -> Outcome {
    let cf = ClosedForms::standard();
    for n in 0..=60 {
        let (lhs, rhs) = cf.fib_conv(n).map_err(|e| e.to_string())?;
        same(&format!("n = {n}"), &lhs, &rhs)?;
    }
    let (_, rhs) = cf.fib_conv(3).unwrap();
    let expect = TriPoly::term(3, Monomial::new(0, 2, 0)) + TriPoly::constant(2);
    same("n = 3", &expect, &rhs)
}

fn involution_suite() -> Outcome {
    let bounds = Bounds::default();
    suite("involution", &bounds)?;
    suite("bijection_roundtrip", &bounds)
}

fn inclusion_exclusion() -> Outcome {
    suite("inclusion_exclusion", &Bounds::default())
}

fn asymptotic() -> Outcome {
    let start = Instant::now();
    let dev = ClosedForms::standard()
        .average_capacity_deviation(10_000)
        .map_err(|e| e.to_string())?;
    ensure(dev < 1e-3, || format!("deviation {dev:e} at n = 10^4"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })
}

fn watercap(args: &[&str]) -> Result<i32, String> {
    let status = Command::new(env!("CARGO_BIN_EXE_watercap"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?
        .status;
    status
        .code()
        .ok_or_else(|| "terminated by signal".to_string())
}

fn verify_all_and_mutants() -> Outcome {
    let start = Instant::now();
    let status = watercap(&["verify", "all"])?;
    let elapsed = start.elapsed();
    same("verify all exit code", &0, &status)?;
    ensure(elapsed < Duration::from_secs(300), || {
        format!("verify all took {elapsed:?}")
    })?;
    let mut survivors = Vec::new();
    for name in FormulaConstants::MUTATION_POINTS {
        if watercap(&["--mutate", name, "verify", "all"])? != 1 {
            survivors.push(*name);
        }
    }
    ensure(survivors.is_empty(), || {
        format!("mutants not caught: {survivors:?}")
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 15] = [
        ("b_6(y) = 10 + 2y + y^2 by every route", b6_three_routes),
        (
            "trivariate b_6 matches the displayed polynomial",
            b6_trivariate,
        ),
        (
            "distributions agree to n = 28, trivariate to n = 22",
            three_way_agreement,
        ),
        ("w(n,k) closed form matches enumeration", wnk_closed_form),
        ("total capacity closed form", total_capacity_closed_form),
        (
            "sign balance closed form and involution accounting",
            sign_balance_closed_form,
        ),
        ("d(n) by five routes and both bijections", d_sequence),
        ("binomial-sum identities for 5 <= n <= 200", corollary),
        ("refined counts b(n,k,j)", refined_counts),
        ("coloured total capacity", colored_total),
        ("Fibonacci polynomial convolution", fibonacci_convolution),
        ("involution and B_{n,k} codec", involution_suite),
        ("inclusion-exclusion identities", inclusion_exclusion),
        ("average capacity ~ n/sqrt(5)", asymptotic),
        (
            "verify all passes; every mutant fails",
            verify_all_and_mutants,
        ),
    ];
    let mut failed = 0;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS criterion {:>2}: {label} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {label} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
