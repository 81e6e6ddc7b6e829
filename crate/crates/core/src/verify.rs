//! Named cross-check suites.
//!
//! Every suite compares at least two independent routes to the same numbers
//! and records each disagreement with its parameters. Closed forms are only
//! ever read through the [`ClosedForms`] handed in, so a perturbed constant
//! shows up as failures here.

use std::fmt::Display;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Monomial, TriPoly, Var};
use crate::bijections::{
    all_bnk_codes, d_rec1_map, d_rec2_map, decode_bnk, encode_bnk, enumerate_k,
    exceptional_element, involution_map, knprime_signsum, marked_sets, DOp, FixedClass,
};
use crate::brute;
use crate::closed_forms::{binomial, fib, BinomialTable, ClosedForms, CorollaryIdentity};
use crate::enumerate::{enumerate_b, enumerate_d};
use crate::genfunc;
use crate::recurrences::{b_seq_rec3, b_seq_rec4, bpq_seq, d_seq_rec1, d_seq_rec2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

/// Upper limits for each family of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Exhaustive walks over `B_n`.
    pub brute: u32,
    /// Exhaustive trivariate statistics.
    pub pq: u32,
    /// Recurrences and series expansions.
    pub symbolic: u32,
    /// Identities between explicit formulas only.
    pub closed: u32,
    /// Involution, marked sets and the `d` bijections.
    pub bij: u32,
    /// `d(n)` routes.
    pub d: u32,
    /// The `B_{n,k}` codec.
    pub codec: u32,
    /// Refined `B_{n,k,j}` counts.
    pub bnkj: u32,
    /// Size for the asymptotic average.
    pub asymptotic: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            brute: 28,
            pq: 22,
            symbolic: 60,
            closed: 200,
            bij: 20,
            d: 24,
            codec: 18,
            bnkj: 24,
            asymptotic: 10_000,
        }
    }
}

impl Bounds {
    /// Defaults with every size bound clamped to `n_max`.
    pub fn capped(n_max: u32) -> Self {
        let d = Bounds::default();
        Bounds {
            brute: d.brute.min(n_max),
            pq: d.pq.min(n_max),
            symbolic: d.symbolic.min(n_max),
            closed: d.closed.min(n_max),
            bij: d.bij.min(n_max),
            d: d.d.min(n_max),
            codec: d.codec.min(n_max),
            bnkj: d.bnkj.min(n_max),
            asymptotic: d.asymptotic,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub params: Value,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub pass: bool,
    #[serde(skip)]
    pub range: String,
    pub checks: u64,
    pub failures: Vec<Failure>,
    pub ms: u64,
}

pub const SUITES: &[&str] = &[
    "dist3way",
    "distpq",
    "wnk",
    "bnkj",
    "totcap",
    "totcap_colored",
    "signbal",
    "diag",
    "d_recs",
    "gf_all",
    "corollary",
    "fibconv",
    "marked",
    "bijection_roundtrip",
    "involution",
    "inclusion_exclusion",
    "asymptotic_avg",
];

#[derive(Default)]
struct Checker {
    checks: u64,
    failures: Vec<Failure>,
}

impl Checker {
    fn eq<T: PartialEq + Display + ?Sized>(&mut self, params: Value, expected: &T, actual: &T) {
        self.checks += 1;
        if expected != actual {
            self.failures.push(Failure {
                params,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn holds(&mut self, params: Value, ok: bool, what: &str) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                params,
                expected: what.to_string(),
                actual: "violated".to_string(),
            });
        }
    }

    /// Unwraps `r`, or records the error as a failure.
    fn value<T, E: Display>(&mut self, params: &Value, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(Failure {
                    params: params.clone(),
                    expected: "a value".to_string(),
                    actual: format!("error: {e}"),
                });
                None
            }
        }
    }

    /// Compares `expected` against a fallible `actual`.
    fn eq_result<T, E>(&mut self, params: Value, expected: &T, actual: Result<T, E>)
    where
        T: PartialEq + Display,
        E: Display,
    {
        if let Some(actual) = self.value(&params, actual) {
            self.eq(params, expected, &actual);
        }
    }
}

fn histogram_poly(h: &[u64]) -> TriPoly {
    let mut p = TriPoly::zero();
    for (k, &c) in h.iter().enumerate() {
        p.add_term(Monomial::new(k as u32, 0, 0), BigInt::from(c));
    }
    p
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn dist3way(b: &Bounds, ck: &mut Checker) {
    let top = b.symbolic.max(b.brute) as usize;
    let r3 = b_seq_rec3(top);
    let r4 = b_seq_rec4(top);
    let f = genfunc::gf_f(top);
    let f = ck.value(&json!({"model": "gf.F"}), f);
    for n in 0..=top {
        ck.eq(json!({"n": n, "route": "rec4"}), &r3[n], &r4[n]);
        if let Some(f) = &f {
            ck.eq(json!({"n": n, "route": "gf.F"}), &r3[n], f.coeff(n));
        }
        if n <= b.brute as usize {
            let brute = brute::capacity_polynomial(n as u32);
            ck.eq(json!({"n": n, "route": "brute"}), &brute, &r3[n]);
        }
    }
}

fn distpq(b: &Bounds, ck: &mut Checker) {
    let top = b.pq as usize;
    let rec = bpq_seq(top);
    let series = genfunc::gf_fpq(top);
    let fp1 = ck.value(&json!({"model": "gf.Fp1"}), genfunc::gf_fp1(top));
    let r3 = b_seq_rec3(top);
    for n in 0..=top {
        let brute = brute::trivariate_polynomial(n as u32);
        ck.eq(json!({"n": n, "route": "recurrence"}), &brute, &rec.full[n]);
        ck.eq(json!({"n": n, "route": "gf.Fpq"}), &brute, series.coeff(n));
        if n >= 1 {
            let split = &rec.ends_in_one[n] + &rec.ends_in_two[n];
            ck.eq(json!({"n": n, "route": "b1 + b2"}), &rec.full[n], &split);
        }
        if let Some(fp1) = &fp1 {
            let at_q1 = brute.specialize(Var::Q, 1);
            ck.eq(json!({"n": n, "route": "gf.Fp1"}), &at_q1, fp1.coeff(n));
        }
        let collapsed = brute.specialize(Var::P, 1).specialize(Var::Q, 1);
        ck.eq(json!({"n": n, "route": "p = q = 1"}), &r3[n], &collapsed);
    }
    ck.holds(
        json!({"order": top, "route": "F2 functional equation"}),
        genfunc::f2_functional_check(top),
        "zero residual",
    );
}

fn wnk(b: &Bounds, cf: &ClosedForms, ck: &mut Checker) {
    for n in 0..=b.brute {
        let h = brute::capacity_histogram(n);
        ck.eq(json!({"n": n, "k": 0}), &big(h[0]), &cf.w0(n as u64));
        for k in 1..=n.saturating_sub(4) {
            ck.eq_result(
                json!({"n": n, "k": k}),
                &big(h[k as usize]),
                cf.wnk(n as u64, k as u64),
            );
        }
    }
    let top = b.symbolic as usize;
    if let Some(w0) = ck.value(&json!({"model": "gf.w0"}), genfunc::gf_w0(top)) {
        for n in 0..=top {
            let closed = cf.w0(n as u64);
            ck.eq(
                json!({"n": n, "k": 0, "route": "gf.w0"}),
                &closed,
                &w0.coeff(n).eval_int(0, 0, 0),
            );
        }
    }
    for k in 1..=top.saturating_sub(4).min(12) as u32 {
        let Some(series) = ck.value(&json!({"model": "gf.wk", "k": k}), genfunc::gf_wk(k, top))
        else {
            continue;
        };
        for n in (k as usize + 4)..=top {
            let coeff = series.coeff(n).eval_int(0, 0, 0);
            ck.eq_result(
                json!({"n": n, "k": k, "route": "gf.wk"}),
                &coeff,
                cf.wnk(n as u64, k as u64),
            );
        }
    }
}

fn bnkj(b: &Bounds, cf: &ClosedForms, ck: &mut Checker) {
    for n in 0..=b.bnkj {
        let counts = brute::refined_counts(n);
        for j in (n % 2..=n).step_by(2) {
            for k in 0..=n {
                let brute = counts.get(&(k as u64, j as u64)).copied().unwrap_or(0);
                ck.eq_result(
                    json!({"n": n, "k": k, "j": j}),
                    &big(brute),
                    cf.bnkj(n as u64, k as u64, j as u64),
                );
            }
        }
    }
}

fn weighted_sum(h: &[u64]) -> BigInt {
    h.iter().enumerate().map(|(k, &c)| big(c) * k).sum()
}

fn totcap(b: &Bounds, cf: &ClosedForms, ck: &mut Checker) {
    for n in 0..=b.brute {
        let h = brute::capacity_histogram(n);
        ck.eq_result(
            json!({"n": n, "route": "brute"}),
            &weighted_sum(&h),
            cf.total_capacity(n as u64),
        );
    }
    let top = b.symbolic as usize;
    let rec = b_seq_rec3(top);
    let series = ck.value(
        &json!({"model": "gf.totcap"}),
        genfunc::gf_totcap(false, top),
    );
    for n in 0..=top {
        let Some(closed) = ck.value(&json!({"n": n}), cf.total_capacity(n as u64)) else {
            continue;
        };
        let derivative = rec[n].d_dy().eval_int(1, 1, 1);
        ck.eq(
            json!({"n": n, "route": "d/dy b_n at 1"}),
            &derivative,
            &closed,
        );
        if let Some(s) = &series {
            ck.eq(
                json!({"n": n, "route": "gf.totcap"}),
                &s.coeff(n).eval_int(0, 0, 0),
                &closed,
            );
        }
        if n <= 4 {
            ck.eq(json!({"n": n, "route": "vanishing"}), &big(0), &closed);
        }
    }
}

fn totcap_colored(b: &Bounds, cf: &ClosedForms, ck: &mut Checker) {
    for p in 1..=3u64 {
        for n in 0..=b.pq {
            let brute = brute::colored_total_capacity(n, p);
            ck.eq_result(
                json!({"n": n, "p": p, "route": "brute"}),
                &brute,
                cf.total_capacity_colored(n as u64, p),
            );
        }
    }
    for p in 1..=5u64 {
        for n in 0..=b.closed as u64 {
            let params = json!({"n": n, "p": p, "route": "exact division"});
            if cf.total_capacity_colored(n, p).is_err() {
                ck.holds(params, false, "division by p^2 + 4 is exact");
            } else {
                ck.checks += 1;
            }
        }
    }
    let top = b.symbolic as usize;
    let series = ck.value(
        &json!({"model": "gf.totcap", "symbolic": true}),
        genfunc::gf_totcap(true, top),
    );
    for n in 0..=top as u64 {
        let params = json!({"n": n, "p": 1, "route": "uncoloured"});
        if let Some(plain) = ck.value(&params, cf.total_capacity(n)) {
            ck.eq_result(params, &plain, cf.total_capacity_colored(n, 1));
        }
        if let Some(s) = &series {
            for p in 1..=3i64 {
                let coeff = s.coeff(n as usize).eval_int(0, p, 0);
                ck.eq_result(
                    json!({"n": n, "p": p, "route": "gf.totcap"}),
                    &coeff,
                    cf.total_capacity_colored(n, p as u64),
                );
            }
        }
    }
}

fn signbal(b: &Bounds, cf: &ClosedForms, ck: &mut Checker) {
    for n in 0..=b.brute {
        let h = brute::capacity_histogram(n);
        let alt: i64 = h
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        ck.eq_result(
            json!({"n": n, "route": "brute"}),
            &big(alt),
            cf.sign_balance(n as u64),
        );
    }
    let top = b.symbolic as usize;
    let rec = b_seq_rec3(top);
    let series = ck.value(
        &json!({"model": "F(x,-1)"}),
        genfunc::gf_f_at_minus_one(top),
    );
    for n in 0..=top {
        let Some(closed) = ck.value(&json!({"n": n}), cf.sign_balance(n as u64)) else {
            continue;
        };
        ck.eq(
            json!({"n": n, "route": "b_n(-1)"}),
            &rec[n].eval_int(-1, 1, 1),
            &closed,
        );
        if let Some(s) = &series {
            ck.eq(
                json!({"n": n, "route": "F(x,-1)"}),
                &s.coeff(n).eval_int(0, 0, 0),
                &closed,
            );
        }
    }
    for n in 6..=b.bij {
        let Some(fixed) = ck.value(&json!({"n": n}), knprime_signsum(n)) else {
            continue;
        };
        let accounted = fixed + (2 * n as i64 - 3);
        ck.eq_result(
            json!({"n": n, "route": "involution"}),
            &accounted,
            cf.sign_balance(n as u64),
        );
    }
}

fn diag(b: &Bounds, cf: &ClosedForms, ck: &mut Checker) {
    let rec = d_seq_rec2(b.d as usize);
    for n in 0..=b.d as u64 {
        let mut total = BigInt::from(0);
        for k in 0..=n {
            let m = n - k;
            let term = if k == 0 { Ok(cf.w0(m)) } else { cf.wnk(m, k) };
            match term {
                Ok(t) => total += t,
                Err(e) => {
                    ck.holds(
                        json!({"n": n, "k": k}),
                        false,
                        &format!("w(n-k,k) defined: {e}"),
                    );
                }
            }
        }
        ck.eq(json!({"n": n}), &rec[n as usize], &total);
    }
}

fn d_recs(b: &Bounds, ck: &mut Checker) {
    let top = b.d as usize;
    let r1 = d_seq_rec1(top);
    let r2 = d_seq_rec2(top);
    let series = ck.value(&json!({"model": "gf.d"}), genfunc::gf_d(top));
    for n in 0..=top {
        let count = big(enumerate_d(n as u32).len());
        ck.eq(json!({"n": n, "route": "rec1"}), &count, &r1[n]);
        ck.eq(json!({"n": n, "route": "rec2"}), &count, &r2[n]);
        if let Some(s) = &series {
            ck.eq(
                json!({"n": n, "route": "gf.d"}),
                &count,
                &s.coeff(n).eval_int(0, 0, 0),
            );
        }
    }
    for n in 3..=b.bij.min(b.d.max(b.bij)) {
        let target = enumerate_d(n);
        let mut image = Vec::new();
        for c in enumerate_d(n - 2) {
            for op in DOp::BOTH {
                if let Some(img) = ck.value(
                    &json!({"n": n, "map": "rec2", "input": c.to_string()}),
                    d_rec2_map(&c, op),
                ) {
                    image.push(img);
                }
            }
        }
        if let Some(extra) = ck.value(&json!({"n": n}), exceptional_element(n)) {
            image.push(extra);
        }
        check_bijection(ck, json!({"n": n, "map": "rec2"}), image, &target);

        if n >= 4 {
            let ends_in_one = |c: &crate::Composition| c.parts().last() == Some(&1);
            let target: Vec<_> = target.iter().filter(|c| ends_in_one(c)).cloned().collect();
            let mut image = Vec::new();
            for c in enumerate_d(n - 2).into_iter().filter(|c| ends_in_one(c)) {
                for op in DOp::BOTH {
                    if let Some(img) = ck.value(
                        &json!({"n": n, "map": "rec1", "input": c.to_string()}),
                        d_rec1_map(&c, op),
                    ) {
                        image.push(img);
                    }
                }
            }
            check_bijection(ck, json!({"n": n, "map": "rec1"}), image, &target);
        }
    }
}

fn check_bijection(
    ck: &mut Checker,
    params: Value,
    mut image: Vec<crate::Composition>,
    target: &[crate::Composition],
) {
    image.sort();
    let before = image.len();
    image.dedup();
    ck.eq(params.clone(), &before, &image.len());
    let mut target = target.to_vec();
    target.sort();
    ck.holds(params, image == target, "image equals the target set");
}

fn gf_all(b: &Bounds, ck: &mut Checker) {
    let top = b.symbolic as usize;
    let small = b.pq as usize;
    for (name, _) in genfunc::MODELS {
        let params = genfunc::ModelParams {
            k: Some(1),
            symbolic_p: true,
        };
        let order = if matches!(*name, "gf.Fpq" | "gf.F2check") {
            small
        } else {
            top
        };
        let built = genfunc::build_model(name, order, params);
        if let Some(model) = ck.value(&json!({"model": name}), built) {
            ck.eq(
                json!({"model": name, "check": "order"}),
                &order,
                &model.series.order(),
            );
            if *name == "gf.F2check" {
                ck.holds(
                    json!({"model": name}),
                    model.series.is_zero(),
                    "zero residual",
                );
            }
        }
    }
    let (Some(f), Some(cols)) = (
        ck.value(&json!({"model": "gf.F"}), genfunc::gf_f(top)),
        ck.value(
            &json!({"route": "columns"}),
            genfunc::gf_f_from_columns(top),
        ),
    ) else {
        return;
    };
    let w0 = genfunc::gf_w0(top).ok();
    for n in 0..=top {
        ck.eq(
            json!({"n": n, "route": "sum of k columns"}),
            f.coeff(n),
            cols.coeff(n),
        );
        if let Some(w0) = &w0 {
            let at_zero = f.coeff(n).specialize(Var::Y, 0);
            ck.eq(json!({"n": n, "route": "F(x,0)"}), &at_zero, w0.coeff(n));
        }
        ck.eq(
            json!({"n": n, "route": "F(x,1)"}),
            &f.coeff(n).eval_int(1, 1, 1),
            &fib(n as i64).expect("fib is defined for n >= 0"),
        );
    }
    if let Some(t) = ck.value(
        &json!({"model": "gf.totcap"}),
        genfunc::gf_totcap(false, top),
    ) {
        ck.eq(
            json!({"route": "dF/dy at y = 1"}),
            &f.d_dy().specialize(Var::Y, 1),
            &t,
        );
    }
    if let Some(m1) = ck.value(
        &json!({"model": "F(x,-1)"}),
        genfunc::gf_f_at_minus_one(top),
    ) {
        ck.eq(json!({"route": "F(x,-1)"}), &f.specialize(Var::Y, -1), &m1);
    }
    let fpq = genfunc::gf_fpq(small);
    if let Some(fp1) = ck.value(&json!({"model": "gf.Fp1"}), genfunc::gf_fp1(small)) {
        ck.eq(
            json!({"route": "Fpq at q = 1"}),
            &genfunc::at_q_one(&fpq),
            &fp1,
        );
        ck.eq(
            json!({"route": "Fp1 at p = 1"}),
            &fp1.specialize(Var::P, 1),
            &f.truncate(small),
        );
    }
}

fn corollary(b: &Bounds, cf: &ClosedForms, ck: &mut Checker) {
    if b.closed < 5 {
        return;
    }
    let table = BinomialTable::new(b.closed as usize);
    // the table must agree with the multiplicative formula it replaces
    for a in 0..=b.closed as i64 {
        for r in [0, 1, a / 3, a / 2, a] {
            ck.eq(
                json!({"a": a, "b": r, "route": "binomial table"}),
                &binomial(a, r),
                &table.get(a, r),
            );
        }
    }
    for which in CorollaryIdentity::ALL {
        for n in 5..=b.closed as u64 {
            let params = json!({"n": n, "identity": which.index()});
            if let Some((lhs, rhs)) = ck.value(&params, cf.corollary_sides_with(&table, n, which)) {
                ck.eq(params, &lhs, &rhs);
            }
        }
    }
}

fn fibconv(b: &Bounds, cf: &ClosedForms, ck: &mut Checker) {
    for n in 0..=b.symbolic as u64 {
        let params = json!({"n": n});
        if let Some((lhs, rhs)) = ck.value(&params, cf.fib_conv(n)) {
            ck.eq(params.clone(), &lhs, &rhs);
            if n == 3 {
                let expect = TriPoly::term(3, Monomial::new(0, 2, 0)) + TriPoly::constant(2);
                ck.eq(
                    json!({"n": 3, "route": "displayed instance"}),
                    &expect,
                    &rhs,
                );
            }
            let at_one = lhs.eval_int(1, 1, 1);
            if let Some((marked, _)) = ck.value(&params, cf.marked_identity(n)) {
                ck.eq(json!({"n": n, "route": "p = 1"}), &marked, &at_one);
            }
        }
    }
}

fn marked(b: &Bounds, cf: &ClosedForms, ck: &mut Checker) {
    for n in 0..=b.closed as u64 {
        let params = json!({"n": n});
        if let Some((conv, closed)) = ck.value(&params, cf.marked_identity(n)) {
            ck.eq(params, &conv, &closed);
        }
    }
    for n in 3..=b.bij {
        let (star, outside) = marked_sets(n);
        let params = json!({"n": n});
        if let Some((_, closed)) = ck.value(&params, cf.marked_identity(n as u64)) {
            ck.eq(json!({"n": n, "set": "B*"}), &closed, &big(star));
        }
        let f = fib(n as i64 + 1).expect("fib is defined for n >= 0");
        let expect_outside = f * 2 - (n as i64 + 2);
        ck.eq(
            json!({"n": n, "set": "B* - B'"}),
            &expect_outside,
            &big(outside),
        );
        ck.eq_result(
            json!({"n": n, "set": "B'"}),
            &big(star - outside),
            cf.total_capacity(n as u64),
        );
    }
}

fn bijection_roundtrip(b: &Bounds, ck: &mut Checker) {
    for n in 0..=b.codec {
        for c in enumerate_b(n).filter(|c| c.capacity() > 0) {
            let k = c.capacity() as u32;
            let params = json!({"n": n, "composition": c.to_string()});
            let Some(code) = ck.value(&params, encode_bnk(&c)) else {
                continue;
            };
            let back = decode_bnk(n, k, &code).map(|d| d.to_string());
            ck.eq_result(params, &c.to_string(), back);
        }
        for k in 1..=n.saturating_sub(4) {
            let codes = all_bnk_codes(n, k);
            let mut slices = std::collections::BTreeMap::<u32, u64>::new();
            for code in &codes {
                *slices.entry(code.r()).or_default() += 1;
                let params = json!({"n": n, "k": k, "code": format!("{code:?}")});
                if let Some(c) = ck.value(&params, decode_bnk(n, k, code)) {
                    ck.eq(params.clone(), &(k as u64), &c.capacity());
                    let again = encode_bnk(&c).map(|e| format!("{e:?}"));
                    ck.eq_result(params, &format!("{code:?}"), again);
                }
            }
            let (n64, k64) = (n as i64, k as i64);
            for r in 1..=(n64 - k64 - 2).div_euclid(2) {
                let expect = binomial(k64 + r - 1, k64) * (n64 - k64 - 2 * r - 1);
                let got = big(slices.get(&(r as u32)).copied().unwrap_or(0));
                ck.eq(json!({"n": n, "k": k, "r": r}), &expect, &got);
            }
            let brute = enumerate_b(n).filter(|c| c.capacity() == k as u64).count();
            ck.eq(
                json!({"n": n, "k": k, "route": "code count"}),
                &brute,
                &codes.len(),
            );
        }
    }
}

fn involution(b: &Bounds, ck: &mut Checker) {
    let results: Vec<Checker> = (5..=b.bij)
        .into_par_iter()
        .map(|n| {
            let mut ck = Checker::default();
            let mut fixed = 0u64;
            for c in enumerate_k(n) {
                let params = json!({"n": n, "composition": c.to_string()});
                let Some(step) = ck.value(&params, involution_map(&c)) else {
                    continue;
                };
                match &step.partner {
                    Some(p) => {
                        ck.holds(params.clone(), p.in_k().unwrap_or(false), "partner in K_n");
                        ck.eq(params.clone(), &1, &c.capacity().abs_diff(p.capacity()));
                        let back = involution_map(p).ok().and_then(|s| s.partner);
                        ck.holds(params, back.as_ref() == Some(&c), "partner maps back");
                    }
                    None => {
                        fixed += 1;
                        let parts = c.parts();
                        let shape_ok = match step.fixed_class {
                            FixedClass::Rho => {
                                parts.starts_with(&[2, 1, 2]) && parts[3..].iter().all(|&p| p == 1)
                            }
                            FixedClass::TerminalDoubleOne => {
                                parts.first() == Some(&2) && parts.ends_with(&[1, 1, 2])
                            }
                            FixedClass::None => false,
                        };
                        ck.holds(params.clone(), shape_ok, "fixed point has a listed shape");
                        let expect_sign = match step.fixed_class {
                            FixedClass::Rho => -1,
                            _ if n % 2 == 0 => 1,
                            _ => -1,
                        };
                        ck.eq(params, &expect_sign, &step.sign);
                    }
                }
            }
            let expect = if n == 5 {
                1
            } else {
                1 + fib(n as i64 - 6)
                    .expect("fib is defined")
                    .to_string()
                    .parse::<u64>()
                    .unwrap()
            };
            ck.eq(json!({"n": n, "route": "fixed count"}), &expect, &fixed);
            ck
        })
        .collect();
    for r in results {
        ck.checks += r.checks;
        ck.failures.extend(r.failures);
    }
}

fn inclusion_exclusion(b: &Bounds, ck: &mut Checker) {
    let top = b.bij;
    let rec = b_seq_rec3(top as usize);
    let y = TriPoly::y();
    let c = |v: i64| TriPoly::constant(v);
    for n in 4..=top {
        let w = |f: fn(&crate::Composition) -> bool| brute::weighted_subset(n, f);
        let u = w(|c| c.in_u().unwrap_or(false));
        let v = w(|c| c.in_v().unwrap_or(false));
        let ww = w(|c| c.in_w().unwrap_or(false));
        let uv = w(|c| c.in_u().unwrap_or(false) && c.in_v().unwrap_or(false));
        let uw = w(|c| c.in_u().unwrap_or(false) && c.in_w().unwrap_or(false));
        let bn = histogram_poly(&brute::capacity_histogram(n));
        let rhs = &(&(&(&u + &v) + &ww) - &uv) - &uw;
        ck.eq(json!({"n": n, "identity": "b_n - 1"}), &(&bn - &c(1)), &rhs);
        let i = n as usize;
        let v_expect = &y * &(&rec[i - 1] - &c(n as i64 - 1));
        ck.eq(json!({"n": n, "identity": "|V|"}), &v_expect, &v);
        let uw_expect = &rec[i - 3] - &c(1);
        ck.eq(json!({"n": n, "identity": "|U and W|"}), &uw_expect, &uw);
        let uv_expect = &y * &(&rec[i - 2] - &c(n as i64 - 2));
        ck.eq(json!({"n": n, "identity": "|U and V|"}), &uv_expect, &uv);
    }
}

fn asymptotic_avg(b: &Bounds, cf: &ClosedForms, ck: &mut Checker) {
    let n = b.asymptotic;
    let params = json!({"n": n});
    if let Some(dev) = ck.value(&params, cf.average_capacity_deviation(n)) {
        ck.holds(
            json!({"n": n, "deviation": dev}),
            dev < 1e-3,
            "|avg * sqrt(5) / n - 1| < 1e-3",
        );
    }
}

fn describe(name: &str, b: &Bounds) -> String {
    match name {
        "dist3way" => format!("n <= {} exhaustive, n <= {} symbolic", b.brute, b.symbolic),
        "distpq" => format!("n <= {}", b.pq),
        "wnk" | "signbal" | "totcap" => {
            format!("n <= {} exhaustive, n <= {} symbolic", b.brute, b.symbolic)
        }
        "bnkj" => format!("n <= {}", b.bnkj),
        "totcap_colored" => format!("n <= {} exhaustive, n <= {} closed", b.pq, b.closed),
        "diag" | "d_recs" => format!("n <= {}", b.d),
        "gf_all" | "fibconv" => format!("order {}", b.symbolic),
        "corollary" | "marked" => format!("n <= {}", b.closed),
        "bijection_roundtrip" => format!("n <= {}", b.codec),
        "involution" | "inclusion_exclusion" => format!("n <= {}", b.bij),
        _ => format!("n = {}", b.asymptotic),
    }
}

/// Runs one suite against the given closed forms.
pub fn run_suite(
    name: &str,
    bounds: &Bounds,
    cf: &ClosedForms,
) -> Result<VerifyReport, VerifyError> {
    let name = SUITES
        .iter()
        .copied()
        .find(|s| *s == name)
        .ok_or_else(|| VerifyError::UnknownSuite(name.to_string()))?;
    let start = Instant::now();
    let mut ck = Checker::default();
    match name {
        "dist3way" => dist3way(bounds, &mut ck),
        "distpq" => distpq(bounds, &mut ck),
        "wnk" => wnk(bounds, cf, &mut ck),
        "bnkj" => bnkj(bounds, cf, &mut ck),
        "totcap" => totcap(bounds, cf, &mut ck),
        "totcap_colored" => totcap_colored(bounds, cf, &mut ck),
        "signbal" => signbal(bounds, cf, &mut ck),
        "diag" => diag(bounds, cf, &mut ck),
        "d_recs" => d_recs(bounds, &mut ck),
        "gf_all" => gf_all(bounds, &mut ck),
        "corollary" => corollary(bounds, cf, &mut ck),
        "fibconv" => fibconv(bounds, cf, &mut ck),
        "marked" => marked(bounds, cf, &mut ck),
        "bijection_roundtrip" => bijection_roundtrip(bounds, &mut ck),
        "involution" => involution(bounds, &mut ck),
        "inclusion_exclusion" => inclusion_exclusion(bounds, &mut ck),
        "asymptotic_avg" => asymptotic_avg(bounds, cf, &mut ck),
        _ => unreachable!("suite list and dispatch disagree on {name}"),
    }
    Ok(VerifyReport {
        suite: name.to_string(),
        pass: ck.failures.is_empty(),
        range: describe(name, bounds),
        checks: ck.checks,
        failures: ck.failures,
        ms: start.elapsed().as_millis() as u64,
    })
}

/// Every suite, concurrently, reported in catalogue order.
pub fn run_all(bounds: &Bounds, cf: &ClosedForms) -> Vec<VerifyReport> {
    SUITES
        .par_iter()
        .map(|name| run_suite(name, bounds, cf).expect("catalogue names are known"))
        .collect()
}
