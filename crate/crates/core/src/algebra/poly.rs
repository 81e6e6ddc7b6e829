//! Sparse polynomials in `y`, `p`, `q` over the integers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Y,
    P,
    Q,
}

/// Exponent triple `y^y p^p q^q`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub y: u32,
    pub p: u32,
    pub q: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { y: 0, p: 0, q: 0 };

    pub const fn new(y: u32, p: u32, q: u32) -> Self {
        Monomial { y, p, q }
    }

    pub fn degree(&self) -> u32 {
        self.y + self.p + self.q
    }

    pub fn exponent(&self, var: Var) -> u32 {
        match var {
            Var::Y => self.y,
            Var::P => self.p,
            Var::Q => self.q,
        }
    }

    fn with_exponent(mut self, var: Var, e: u32) -> Self {
        match var {
            Var::Y => self.y = e,
            Var::P => self.p = e,
            Var::Q => self.q = e,
        }
        self
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::new(self.y * k, self.p * k, self.q * k)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.y + rhs.y, self.p + rhs.p, self.q + rhs.q)
    }
}

/// Graded lexicographic: total degree first, then `y`, `p`, `q`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.y, self.p, self.q).cmp(&(other.degree(), other.y, other.p, other.q))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, e) in [("y", self.y), ("p", self.p), ("q", self.q)] {
            match e {
                0 => {}
                1 => f.write_str(name)?,
                _ => write!(f, "{name}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `y`, `p`, `q` with big-integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. Terms iterate in ascending graded-lex order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TriPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn one() -> Self {
        TriPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        TriPoly::term(c, Monomial::ONE)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut poly = TriPoly::zero();
        poly.add_term(m, c.into());
        poly
    }

    pub fn monomial(m: Monomial) -> Self {
        TriPoly::term(1, m)
    }

    pub fn var(v: Var) -> Self {
        TriPoly::monomial(Monomial::ONE.with_exponent(v, 1))
    }

    pub fn y() -> Self {
        TriPoly::var(Var::Y)
    }

    pub fn p() -> Self {
        TriPoly::var(Var::P)
    }

    pub fn q() -> Self {
        TriPoly::var(Var::Q)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// The constant term as an integer when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub fn mul_monomial(&self, m: Monomial) -> TriPoly {
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k * m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> TriPoly {
        if c.is_zero() {
            return TriPoly::zero();
        }
        TriPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Exact substitution of integers for all three variables.
    pub fn eval_int(&self, y: i64, p: i64, q: i64) -> BigInt {
        let (y, p, q) = (BigInt::from(y), BigInt::from(p), BigInt::from(q));
        self.terms
            .iter()
            .map(|(m, c)| c * Pow::pow(&y, m.y) * Pow::pow(&p, m.p) * Pow::pow(&q, m.q))
            .sum()
    }

    /// Substitutes an integer for one variable, keeping the others symbolic.
    pub fn specialize(&self, var: Var, value: i64) -> TriPoly {
        let value = BigInt::from(value);
        let mut out = TriPoly::zero();
        for (m, c) in &self.terms {
            let factor = Pow::pow(&value, m.exponent(var));
            out.add_term(m.with_exponent(var, 0), c * factor);
        }
        out
    }

    /// Formal partial derivative with respect to `var`.
    pub fn derivative(&self, var: Var) -> TriPoly {
        let mut out = TriPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e > 0 {
                out.add_term(m.with_exponent(var, e - 1), c * BigInt::from(e));
            }
        }
        out
    }

    pub fn d_dy(&self) -> TriPoly {
        self.derivative(Var::Y)
    }

    /// Dense coefficient list in `var`, for polynomials in that variable alone.
    pub fn univariate_coeffs(&self, var: Var) -> Option<Vec<BigInt>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![BigInt::zero(); deg + 1];
        for (m, c) in &self.terms {
            if *m != Monomial::ONE.with_exponent(var, m.exponent(var)) {
                return None;
            }
            out[m.exponent(var) as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(var: Var, coeffs: &[BigInt]) -> TriPoly {
        let mut out = TriPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            out.add_term(Monomial::ONE.with_exponent(var, e as u32), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    y: m.y,
                    p: m.p,
                    q: m.q,
                    coef: c.to_string(),
                })
                .collect(),
        }
    }
}

/// Wire form `{"terms":[{"y":..,"p":..,"q":..,"coef":"..."}]}` in canonical
/// term order, coefficients as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub y: u32,
    pub p: u32,
    pub q: u32,
    pub coef: String,
}

impl TryFrom<&PolyJson> for TriPoly {
    type Error = num_bigint::ParseBigIntError;

    fn try_from(json: &PolyJson) -> Result<Self, Self::Error> {
        let mut out = TriPoly::zero();
        for t in &json.terms {
            out.add_term(Monomial::new(t.y, t.p, t.q), t.coef.parse()?);
        }
        Ok(out)
    }
}

impl From<i64> for TriPoly {
    fn from(c: i64) -> Self {
        TriPoly::constant(c)
    }
}

impl From<BigInt> for TriPoly {
    fn from(c: BigInt) -> Self {
        TriPoly::constant(c)
    }
}

impl fmt::Display for TriPoly {
    /// Ascending canonical order, e.g. `10 + 2y + y^2` or `1 - y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}{m}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&TriPoly> for TriPoly {
    fn add_assign(&mut self, rhs: &TriPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&TriPoly> for TriPoly {
    fn sub_assign(&mut self, rhs: &TriPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;

    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;

    fn sub(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;

    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;

    fn neg(self) -> TriPoly {
        TriPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr for TriPoly {
            type Output = TriPoly;
            fn $method(self, rhs: TriPoly) -> TriPoly {
                $tr::$method(&self, &rhs)
            }
        }
        impl $tr<&TriPoly> for TriPoly {
            type Output = TriPoly;
            fn $method(self, rhs: &TriPoly) -> TriPoly {
                $tr::$method(&self, rhs)
            }
        }
        impl $tr<TriPoly> for &TriPoly {
            type Output = TriPoly;
            fn $method(self, rhs: TriPoly) -> TriPoly {
                $tr::$method(self, &rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for TriPoly {
    type Output = TriPoly;

    fn neg(self) -> TriPoly {
        -&self
    }
}

impl std::iter::Sum for TriPoly {
    fn sum<I: Iterator<Item = TriPoly>>(iter: I) -> TriPoly {
        iter.fold(TriPoly::zero(), |mut acc, t| {
            acc += &t;
            acc
        })
    }
}
