//! Generating functions as truncated series, and the registry the command
//! line dispatches on.
//!
//! Each model is expanded directly from its rational (or q-series) form, so
//! its coefficients are a route independent of both enumeration and the
//! recurrences.

use thiserror::Error;

use crate::algebra::{Monomial, SeriesError, TriPoly, Var, XSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("unknown generating function {0:?}")]
    UnknownModel(String),
    #[error("{0} needs a capacity index k >= 1")]
    MissingK(&'static str),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

fn ints(coeffs: &[i64], order: usize) -> XSeries {
    XSeries::from_ints(coeffs, order)
}

fn poly_series(terms: Vec<(usize, TriPoly)>, order: usize) -> XSeries {
    XSeries::from_terms(terms, order)
}

fn power(s: &XSeries, e: u32) -> XSeries {
    (0..e).fold(XSeries::one(s.order()), |acc, _| &acc * s)
}

fn mono(y: u32, p: u32, q: u32) -> TriPoly {
    TriPoly::monomial(Monomial::new(y, p, q))
}

/// `sum_n w(n,k) x^n = x^{k+4} / ((1-x)^2 (1-x^2)^{k+1})`, `k >= 1`.
pub fn gf_wk(k: u32, order: usize) -> Result<XSeries, GfError> {
    if k == 0 {
        return Err(GfError::MissingK("gf.wk"));
    }
    let num = XSeries::x_pow(k as usize + 4, TriPoly::one(), order);
    let den = &power(&ints(&[1, -1], order), 2) * &power(&ints(&[1, 0, -1], order), k + 1);
    Ok(XSeries::rational(&num, &den)?)
}

/// `sum_n w(n,0) x^n = (1 - x + x^3) / ((1-x)^2 (1-x^2))`.
pub fn gf_w0(order: usize) -> Result<XSeries, GfError> {
    let den = &power(&ints(&[1, -1], order), 2) * &ints(&[1, 0, -1], order);
    Ok(XSeries::rational(&ints(&[1, -1, 0, 1], order), &den)?)
}

/// `F(x,y) = (1 - x(1+y) + x^2 y + x^3 (1-y)) / ((1-x)^2 (1 - xy - x^2))`.
pub fn gf_f(order: usize) -> Result<XSeries, GfError> {
    let y = TriPoly::y();
    let one = TriPoly::one();
    let num = poly_series(
        vec![
            (0, one.clone()),
            (1, -(&one + &y)),
            (2, y.clone()),
            (3, &one - &y),
        ],
        order,
    );
    let den = &power(&ints(&[1, -1], order), 2)
        * &poly_series(vec![(0, one), (1, -y), (2, TriPoly::constant(-1))], order);
    Ok(XSeries::rational(&num, &den)?)
}

/// `F(x,-1) = (1 - x^2 + 2x^3) / ((1-x)^2 (1 + x - x^2))`.
pub fn gf_f_at_minus_one(order: usize) -> Result<XSeries, GfError> {
    let den = &power(&ints(&[1, -1], order), 2) * &ints(&[1, 1, -1], order);
    Ok(XSeries::rational(&ints(&[1, 0, -1, 2], order), &den)?)
}

/// `sum_n d(n) x^n = (1 - x^2 + x^3) / (1 - x - 2x^2 + 2x^3)`.
pub fn gf_d(order: usize) -> Result<XSeries, GfError> {
    Ok(XSeries::rational(
        &ints(&[1, 0, -1, 1], order),
        &ints(&[1, -1, -2, 2], order),
    )?)
}

/// `F(x,y;p,q) = 1/(1-px) + sum_{n>=1} q^{n^2} x^{2n} /
/// ((1-px)(1-p q^n x) prod_{j=1}^{n-1} (1 - p q^j x y))`.
///
/// The `n`-th summand starts at `x^{2n}`, so only `n <= order/2` contribute.
pub fn gf_fpq(order: usize) -> XSeries {
    let px = mono(0, 1, 0);
    let mut total = XSeries::one(order).div_one_minus(&px);
    for n in 1..=order / 2 {
        let n32 = n as u32;
        let mut term = XSeries::x_pow(2 * n, mono(0, 0, n32 * n32), order)
            .div_one_minus(&px)
            .div_one_minus(&mono(0, 1, n32));
        for j in 1..n32 {
            term = term.div_one_minus(&mono(1, 1, j));
        }
        total = &total + &term;
    }
    total
}

/// `F(x,y;p,1) = (1 - px(1+y) + p^2 x^2 y + p x^3 (1-y)) / ((1-px)^2 (1 - pxy - x^2))`.
pub fn gf_fp1(order: usize) -> Result<XSeries, GfError> {
    let p = TriPoly::p();
    let y = TriPoly::y();
    let one = TriPoly::one();
    let num = poly_series(
        vec![
            (0, one.clone()),
            (1, -(&p * &(&one + &y))),
            (2, mono(1, 2, 0)),
            (3, &p * &(&one - &y)),
        ],
        order,
    );
    let one_minus_px = poly_series(vec![(0, one.clone()), (1, -p.clone())], order);
    let den = &power(&one_minus_px, 2)
        * &poly_series(
            vec![(0, one), (1, -mono(1, 1, 0)), (2, TriPoly::constant(-1))],
            order,
        );
    Ok(XSeries::rational(&num, &den)?)
}

/// Total capacity: `x^5 / ((1-x)^2 (1-x-x^2)^2)`, or with colours
/// `p x^5 / ((1-px)^2 (1-px-x^2)^2)` when `symbolic_p`.
pub fn gf_totcap(symbolic_p: bool, order: usize) -> Result<XSeries, GfError> {
    let p = if symbolic_p {
        TriPoly::p()
    } else {
        TriPoly::one()
    };
    let one = TriPoly::one();
    let num = XSeries::x_pow(5, p.clone(), order);
    let lin = poly_series(vec![(0, one.clone()), (1, -p.clone())], order);
    let quad = poly_series(vec![(0, one), (1, -p), (2, TriPoly::constant(-1))], order);
    let den = &power(&lin, 2) * &power(&quad, 2);
    Ok(XSeries::rational(&num, &den)?)
}

/// Rates in the functional equation
/// `F2(x) = s x^2 / (1 - a x) + s x^2 / (1 - b x) F2(s x)`; the true values
/// are `s = q`, `a = pq`, `b = pqy`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct F2Equation {
    pub scale: Monomial,
    pub first_rate: Monomial,
    pub second_rate: Monomial,
}

impl Default for F2Equation {
    fn default() -> Self {
        F2Equation {
            scale: Monomial::new(0, 0, 1),
            first_rate: Monomial::new(0, 1, 1),
            second_rate: Monomial::new(1, 1, 1),
        }
    }
}

/// The part of `F(x,y;p,q)` from members ending in 2, read off the q-series as
/// `F (1 - px) - 1`.
pub fn f2_from_fpq(order: usize) -> XSeries {
    let f = gf_fpq(order);
    let one_minus_px = XSeries::from_terms([(0, TriPoly::one()), (1, -TriPoly::p())], order);
    &(&f * &one_minus_px) - &XSeries::one(order)
}

/// Left side minus right side of the functional equation for `F2`.
pub fn f2_residual(order: usize, eq: &F2Equation) -> XSeries {
    let f2 = f2_from_fpq(order);
    let s = TriPoly::monomial(eq.scale);
    let lead = XSeries::x_pow(2, s.clone(), order);
    let first = lead.div_one_minus(&TriPoly::monomial(eq.first_rate));
    let second =
        &lead.div_one_minus(&TriPoly::monomial(eq.second_rate)) * &f2.substitute_scaled_x(eq.scale);
    &f2 - &(&first + &second)
}

/// True when `F2` from the q-series satisfies its functional equation up to
/// `x^order`.
pub fn f2_functional_check(order: usize) -> bool {
    f2_residual(order, &F2Equation::default()).is_zero()
}

/// A named expansion with its defining formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfModel {
    pub name: &'static str,
    pub formula: &'static str,
    pub series: XSeries,
}

/// Extra inputs some models need.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ModelParams {
    /// Capacity index for `gf.wk`.
    pub k: Option<u32>,
    /// Keep `p` symbolic in `gf.totcap`.
    pub symbolic_p: bool,
}

/// Registered model names with their formulas.
pub const MODELS: &[(&str, &str)] = &[
    ("gf.w0", "(1-x+x^3)/((1-x)^2(1-x^2))"),
    ("gf.wk", "x^(k+4)/((1-x)^2(1-x^2)^(k+1))"),
    ("gf.F", "(1-x(1+y)+x^2y+x^3(1-y))/((1-x)^2(1-xy-x^2))"),
    ("gf.d", "(1-x^2+x^3)/(1-x-2x^2+2x^3)"),
    (
        "gf.Fpq",
        "1/(1-px) + sum_{n>=1} q^(n^2)x^(2n)/((1-px)(1-pq^nx)prod_{j<n}(1-pq^jxy))",
    ),
    (
        "gf.Fp1",
        "(1-px(1+y)+p^2x^2y+px^3(1-y))/((1-px)^2(1-pxy-x^2))",
    ),
    (
        "gf.totcap",
        "x^5/((1-x)^2(1-x-x^2)^2), or px^5/((1-px)^2(1-px-x^2)^2)",
    ),
    (
        "gf.F2check",
        "F2(x) - qx^2/(1-pqx) - qx^2/(1-pqxy) F2(qx), F2 = F(x,y;p,q)(1-px) - 1",
    ),
];

pub fn build_model(name: &str, order: usize, params: ModelParams) -> Result<GfModel, GfError> {
    let (name, formula) = MODELS
        .iter()
        .copied()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| GfError::UnknownModel(name.to_string()))?;
    let series = match name {
        "gf.w0" => gf_w0(order)?,
        "gf.wk" => gf_wk(params.k.ok_or(GfError::MissingK("gf.wk"))?, order)?,
        "gf.F" => gf_f(order)?,
        "gf.d" => gf_d(order)?,
        "gf.Fpq" => gf_fpq(order),
        "gf.Fp1" => gf_fp1(order)?,
        "gf.totcap" => gf_totcap(params.symbolic_p, order)?,
        "gf.F2check" => f2_residual(order, &F2Equation::default()),
        _ => unreachable!("registry and dispatch disagree on {name}"),
    };
    Ok(GfModel {
        name,
        formula,
        series,
    })
}

/// `sum_k y^k (sum_n w(n,k) x^n)` over `1 <= k <= max_k`, plus the `k = 0`
/// series: a rebuild of `F(x,y)` from the per-capacity generating functions.
pub fn gf_f_from_columns(order: usize) -> Result<XSeries, GfError> {
    let mut total = gf_w0(order)?;
    // w(n,k) vanishes for k > n - 4
    for k in 1..=order.saturating_sub(4) as u32 {
        let column = gf_wk(k, order)?.scale(&TriPoly::monomial(Monomial::new(k, 0, 0)));
        total = &total + &column;
    }
    Ok(total)
}

/// `q -> 1` specialisation of a trivariate series.
pub fn at_q_one(s: &XSeries) -> XSeries {
    s.specialize(Var::Q, 1)
}
