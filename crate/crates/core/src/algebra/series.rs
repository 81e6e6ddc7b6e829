//! Power series in `x` truncated at a fixed order, with [`TriPoly`]
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use super::poly::{Monomial, TriPoly, Var};

pub const DEFAULT_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term must be +1 or -1 to invert, found {0}")]
    NonUnitConstant(String),
}

/// `sum_{n=0}^{order} c_n x^n`, exact modulo `x^(order+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XSeries {
    coeffs: Vec<TriPoly>,
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        XSeries {
            coeffs: vec![TriPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        XSeries::constant(TriPoly::one(), order)
    }

    pub fn constant(c: TriPoly, order: usize) -> Self {
        let mut s = XSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^k`, or zero when `k` exceeds the order.
    pub fn x_pow(k: usize, c: TriPoly, order: usize) -> Self {
        let mut s = XSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from `(power, coefficient)` pairs; repeated powers add.
    pub fn from_terms<I>(terms: I, order: usize) -> Self
    where
        I: IntoIterator<Item = (usize, TriPoly)>,
    {
        let mut s = XSeries::zero(order);
        for (k, c) in terms {
            if k <= order {
                s.coeffs[k] += &c;
            }
        }
        s
    }

    /// Integer-coefficient polynomial in `x`, lowest power first.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        XSeries::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (k, TriPoly::constant(c))),
            order,
        )
    }

    pub fn from_coeffs(mut coeffs: Vec<TriPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, TriPoly::zero());
        XSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> &TriPoly {
        static ZERO: std::sync::OnceLock<TriPoly> = std::sync::OnceLock::new();
        self.coeffs
            .get(n)
            .unwrap_or_else(|| ZERO.get_or_init(TriPoly::zero))
    }

    pub fn coeffs(&self) -> &[TriPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<TriPoly> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> XSeries {
        XSeries::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn map_coeffs(&self, f: impl Fn(&TriPoly) -> TriPoly) -> XSeries {
        XSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &TriPoly) -> XSeries {
        self.map_coeffs(|a| a * c)
    }

    pub fn specialize(&self, var: Var, value: i64) -> XSeries {
        self.map_coeffs(|a| a.specialize(var, value))
    }

    pub fn d_dy(&self) -> XSeries {
        self.map_coeffs(TriPoly::d_dy)
    }

    /// `f(x) -> f(m x)` for a monomial `m`: the `x^n` coefficient is
    /// multiplied by `m^n`.
    pub fn substitute_scaled_x(&self, m: Monomial) -> XSeries {
        XSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.mul_monomial(m.pow(n as u32)))
                .collect(),
        }
    }

    /// Multiplies by `x^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> XSeries {
        let order = self.order();
        let mut s = XSeries::zero(order);
        for n in k..=order {
            s.coeffs[n] = self.coeffs[n - k].clone();
        }
        s
    }

    /// Multiplies by `1/(1 - c x)` through `out_n = a_n + c out_{n-1}`.
    pub fn div_one_minus(&self, c: &TriPoly) -> XSeries {
        let mut out: Vec<TriPoly> = Vec::with_capacity(self.coeffs.len());
        for (n, a) in self.coeffs.iter().enumerate() {
            let next = if n == 0 {
                a.clone()
            } else {
                a + &(c * &out[n - 1])
            };
            out.push(next);
        }
        XSeries { coeffs: out }
    }

    /// Multiplicative inverse modulo `x^(order+1)`; the constant term must be
    /// the constant polynomial `1` or `-1`.
    pub fn invert(&self) -> Result<XSeries, SeriesError> {
        let unit = self.coeffs[0]
            .as_constant()
            .filter(|c| c.abs().is_one())
            .ok_or_else(|| SeriesError::NonUnitConstant(self.coeffs[0].to_string()))?;
        let unit = TriPoly::constant(unit);
        let order = self.order();
        let mut inv: Vec<TriPoly> = Vec::with_capacity(order + 1);
        inv.push(unit.clone());
        for n in 1..=order {
            let mut acc = TriPoly::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !inv[n - i].is_zero() {
                    acc += &(&self.coeffs[i] * &inv[n - i]);
                }
            }
            // unit is its own inverse
            inv.push(-(&unit * &acc));
        }
        Ok(XSeries { coeffs: inv })
    }

    /// `numerator / denominator` with the same unit requirement as
    /// [`XSeries::invert`].
    pub fn rational(numerator: &XSeries, denominator: &XSeries) -> Result<XSeries, SeriesError> {
        Ok(numerator * &denominator.invert()?)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TriPoly::is_zero)
    }

    /// Coefficients as integers, if they are all constant polynomials.
    pub fn int_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(TriPoly::as_constant).collect()
    }
}

/// Nonzero terms as `(c)x^n`, joined by ` + `, then `+ O(x^{order+1})`.
impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{n}")?,
            }
            f.write_str(" + ")?;
        }
        write!(f, "O(x^{})", self.order() + 1)
    }
}

impl Add for &XSeries {
    type Output = XSeries;

    fn add(self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Sub for &XSeries {
    type Output = XSeries;

    fn sub(self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Mul for &XSeries {
    type Output = XSeries;

    fn mul(self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        let mut out = XSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !rhs.coeffs[j].is_zero() {
                    out.coeffs[i + j] += &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        out
    }
}

impl Neg for &XSeries {
    type Output = XSeries;

    fn neg(self) -> XSeries {
        self.map_coeffs(|c| -c)
    }
}
