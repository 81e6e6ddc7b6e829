//! Explicit formulas, evaluated exactly.
//!
//! Fibonacci numbers follow the convention `f_0 = f_1 = 1` (so `f_n` counts
//! `B_n`), extended to negative indices by `f_{-1} = 0` and
//! `f_{-m} = (-1)^m f_{m-2}` for `m >= 2`. Lucas numbers are
//! `L_m = f_m + f_{m-2}`. The Fibonacci polynomials are `F_0 = 1`, `F_1 = p`,
//! `F_n = p F_{n-1} + F_{n-2}`, with `F_{-1} = 0`.
//!
//! Every displayed constant of every formula lives in [`FormulaConstants`], so
//! the verifier can be run against deliberately corrupted formulas to show
//! that each constant is actually checked.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::algebra::{TriPoly, Var};

/// Smallest negative Fibonacci index accepted by [`fib`].
pub const MIN_FIB_INDEX: i64 = -64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("index {0} is out of range")]
    IndexOutOfRange(i64),
    #[error("{what} at n = {n} is not an exact division")]
    InexactDivision { what: &'static str, n: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

type Result<T> = std::result::Result<T, ClosedFormError>;

/// Memo tables for `f_n` and `F_n(p)`, safe for concurrent readers.
#[derive(Debug)]
pub struct FibCache {
    numbers: RwLock<Vec<BigInt>>,
    polys: RwLock<Vec<TriPoly>>,
}

impl Default for FibCache {
    fn default() -> Self {
        FibCache {
            numbers: RwLock::new(vec![BigInt::one(), BigInt::one()]),
            polys: RwLock::new(vec![TriPoly::one(), TriPoly::p()]),
        }
    }
}

impl FibCache {
    pub fn new() -> Self {
        FibCache::default()
    }

    pub fn global() -> &'static FibCache {
        static CACHE: OnceLock<FibCache> = OnceLock::new();
        CACHE.get_or_init(FibCache::new)
    }

    /// `f_n` for `n >= MIN_FIB_INDEX`.
    pub fn fib(&self, n: i64) -> Result<BigInt> {
        if n < MIN_FIB_INDEX {
            return Err(ClosedFormError::IndexOutOfRange(n));
        }
        match n {
            -1 => Ok(BigInt::zero()),
            n if n < -1 => {
                let m = -n;
                let base = self.fib(m - 2)?;
                Ok(if m % 2 == 0 { base } else { -base })
            }
            n => Ok(self.nonnegative(n as usize)),
        }
    }

    fn nonnegative(&self, n: usize) -> BigInt {
        if let Some(v) = self.numbers.read().expect("fib cache poisoned").get(n) {
            return v.clone();
        }
        let mut table = self.numbers.write().expect("fib cache poisoned");
        while table.len() <= n {
            let k = table.len();
            let next = &table[k - 1] + &table[k - 2];
            table.push(next);
        }
        table[n].clone()
    }

    /// `F_n(p)` for `n >= -1`.
    pub fn fib_poly(&self, n: i64) -> Result<TriPoly> {
        if n < -1 {
            return Err(ClosedFormError::IndexOutOfRange(n));
        }
        if n == -1 {
            return Ok(TriPoly::zero());
        }
        let n = n as usize;
        if let Some(v) = self.polys.read().expect("fib cache poisoned").get(n) {
            return Ok(v.clone());
        }
        let mut table = self.polys.write().expect("fib cache poisoned");
        let p = TriPoly::p();
        while table.len() <= n {
            let k = table.len();
            let next = &(&p * &table[k - 1]) + &table[k - 2];
            table.push(next);
        }
        Ok(table[n].clone())
    }
}

/// `f_n`, paper-style indexing, from the shared cache.
pub fn fib(n: i64) -> Result<BigInt> {
    FibCache::global().fib(n)
}

/// `f_n` for `n >= 0` by fast doubling on the standard sequence
/// (`f_n = F_{n+1}` with `F_0 = 0`, `F_1 = 1`), without touching the cache.
pub fn fib_fast_doubling(n: u64) -> BigInt {
    // (F_k, F_{k+1}) for k = n + 1
    let k = n + 1;
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for bit in (0..64 - k.leading_zeros()).rev() {
        let two_b_minus_a = (&b << 1u32) - &a;
        let c = &a * &two_b_minus_a;
        let d = &a * &a + &b * &b;
        if (k >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    a
}

/// `L_m = f_m + f_{m-2}` for `m >= 1`.
pub fn lucas(m: i64) -> Result<BigInt> {
    ClosedForms::standard().lucas(m)
}

/// `C(a, b)` by the multiplicative formula; zero when `b < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 1..=b {
        acc *= a - b + i;
        acc /= i;
    }
    acc
}

/// Pascal's triangle up to a fixed row, for sums that hit many binomials.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(max_row: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_row + 1);
        rows.push(vec![BigInt::one()]);
        for a in 1..=max_row {
            let prev = &rows[a - 1];
            let mut row = Vec::with_capacity(a + 1);
            row.push(BigInt::one());
            for b in 1..a {
                row.push(&prev[b - 1] + &prev[b]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// Same convention as [`binomial`]; falls back to it past the table.
    pub fn get(&self, a: i64, b: i64) -> BigInt {
        if b < 0 || a < b {
            return BigInt::zero();
        }
        match self.rows.get(a as usize) {
            Some(row) => row[b as usize].clone(),
            None => binomial(a, b),
        }
    }
}

/// The three binomial-sum identities that follow from the distribution
/// formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorollaryIdentity {
    /// `sum (n-k) C(k-r-2, r-1) = f_n - 1 - floor(n^2/4)`
    Count,
    /// `sum (n-k)(k-r-2) C(k-r-3, r-1) =` total capacity
    TotalCapacity,
    /// `sum (-1)^(k-1) (n-k) C(k-r-2, r-1) = 2n - 5 - floor(n^2/4) + (-1)^n f_{n-6}`
    SignBalance,
}

impl CorollaryIdentity {
    pub const ALL: [CorollaryIdentity; 3] = [
        CorollaryIdentity::Count,
        CorollaryIdentity::TotalCapacity,
        CorollaryIdentity::SignBalance,
    ];

    /// 1-based selector used on the command line and in reports.
    pub fn from_index(i: u8) -> Option<Self> {
        Self::ALL.get(usize::from(i).checked_sub(1)?).copied()
    }

    pub fn index(self) -> u8 {
        match self {
            CorollaryIdentity::Count => 1,
            CorollaryIdentity::TotalCapacity => 2,
            CorollaryIdentity::SignBalance => 3,
        }
    }
}

/// Every integer constant that appears in the explicit formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaConstants {
    /// `L_m = f_m + f_{m - lucas_shift}`
    pub lucas_shift: i64,
    /// `w(n,0) = w0_offset + floor(n^2 / w0_divisor)`
    pub w0_offset: i64,
    pub w0_divisor: i64,
    /// `w(n,k) = sum_{r = wnk_r_start}^{floor((n-k-wnk_range_shift)/2)}
    ///   (n - k - 2r - wnk_linear_shift) C(k + r - wnk_binom_shift, k)`
    pub wnk_r_start: i64,
    pub wnk_range_shift: i64,
    pub wnk_linear_shift: i64,
    pub wnk_binom_shift: i64,
    /// `((n+1) L_{n+1} - f_n)/totcap_divisor - totcap_fib_coef f_{n+1} + n + totcap_offset`
    pub totcap_divisor: i64,
    pub totcap_fib_coef: i64,
    pub totcap_offset: i64,
    /// `2n - signbal_offset + (-1)^n f_{n - signbal_fib_shift}`
    pub signbal_offset: i64,
    pub signbal_fib_shift: i64,
    /// `(j - k + bnkj_shift) C((n - j - bnkj_gap)/2 + k, k)`; `j + bnkj_zero_offset` at `k = 0`
    pub bnkj_shift: i64,
    pub bnkj_gap: i64,
    pub bnkj_zero_offset: i64,
    /// `(p^2 n F_n + colored_linear_coef p (n+1) F_{n-1})/(p^2 + colored_divisor_shift)
    ///   - colored_fib_coef p F_{n+1} + p^n (n + colored_tail_coef p^2)`
    pub colored_linear_coef: i64,
    pub colored_divisor_shift: i64,
    pub colored_fib_coef: i64,
    pub colored_tail_coef: i64,
    /// `(p n F_n + conv_linear_coef (n+1) F_{n-1})/(p^2 + conv_divisor_shift)`
    pub conv_linear_coef: i64,
    pub conv_divisor_shift: i64,
    /// `((n+1) L_{n+1} - f_n)/marked_divisor`
    pub marked_divisor: i64,
    /// `f_n - cor_count_offset - floor(n^2/4)`
    pub cor_count_offset: i64,
    /// `2n - cor_sign_offset - floor(n^2/4) + (-1)^n f_{n-6}`
    pub cor_sign_offset: i64,
}

impl Default for FormulaConstants {
    fn default() -> Self {
        FormulaConstants {
            lucas_shift: 2,
            w0_offset: 1,
            w0_divisor: 4,
            wnk_r_start: 1,
            wnk_range_shift: 2,
            wnk_linear_shift: 1,
            wnk_binom_shift: 1,
            totcap_divisor: 5,
            totcap_fib_coef: 2,
            totcap_offset: 2,
            signbal_offset: 4,
            signbal_fib_shift: 6,
            bnkj_shift: 1,
            bnkj_gap: 4,
            bnkj_zero_offset: 1,
            colored_linear_coef: 2,
            colored_divisor_shift: 4,
            colored_fib_coef: 2,
            colored_tail_coef: 2,
            conv_linear_coef: 2,
            conv_divisor_shift: 4,
            marked_divisor: 5,
            cor_count_offset: 1,
            cor_sign_offset: 5,
        }
    }
}

macro_rules! mutation_points {
    ($($field:ident),* $(,)?) => {
        impl FormulaConstants {
            /// Names of every constant that [`FormulaConstants::mutated`] can perturb.
            pub const MUTATION_POINTS: &'static [&'static str] = &[$(stringify!($field)),*];

            /// A copy with the named constant increased by one.
            pub fn mutated(&self, name: &str) -> Option<FormulaConstants> {
                let mut out = *self;
                match name {
                    $(stringify!($field) => out.$field += 1,)*
                    _ => return None,
                }
                Some(out)
            }
        }
    };
}

mutation_points!(
    lucas_shift,
    w0_offset,
    w0_divisor,
    wnk_r_start,
    wnk_range_shift,
    wnk_linear_shift,
    wnk_binom_shift,
    totcap_divisor,
    totcap_fib_coef,
    totcap_offset,
    signbal_offset,
    signbal_fib_shift,
    bnkj_shift,
    bnkj_gap,
    bnkj_zero_offset,
    colored_linear_coef,
    colored_divisor_shift,
    colored_fib_coef,
    colored_tail_coef,
    conv_linear_coef,
    conv_divisor_shift,
    marked_divisor,
    cor_count_offset,
    cor_sign_offset,
);

fn exact_div(num: &BigInt, den: &BigInt, what: &'static str, n: u64) -> Result<BigInt> {
    if den.is_zero() {
        return Err(ClosedFormError::InexactDivision { what, n });
    }
    let (quot, rem) = num.div_rem(den);
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(ClosedFormError::InexactDivision { what, n })
    }
}

fn sign(n: i64) -> BigInt {
    if n.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Value of `F_n(p0)` at an integer, with `F_{-1} = 0`.
pub fn fib_poly_value(n: i64, p0: &BigInt) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let (mut prev, mut cur) = (BigInt::one(), p0.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = p0 * &cur + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact division of a polynomial in `p` alone by `p^2 + c`.
fn div_by_p2_plus(poly: &TriPoly, c: i64, n: u64) -> Result<TriPoly> {
    let what = "division by p^2 + c";
    let mut rem = poly
        .univariate_coeffs(Var::P)
        .ok_or(ClosedFormError::InexactDivision { what, n })?;
    if rem.len() < 3 {
        return if poly.is_zero() {
            Ok(TriPoly::zero())
        } else {
            Err(ClosedFormError::InexactDivision { what, n })
        };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - 2];
    for d in (2..rem.len()).rev() {
        let lead = std::mem::take(&mut rem[d]);
        rem[d - 2] -= &lead * c;
        quot[d - 2] = lead;
    }
    if rem.iter().any(|r| !r.is_zero()) {
        return Err(ClosedFormError::InexactDivision { what, n });
    }
    Ok(TriPoly::from_univariate(Var::P, &quot))
}

/// Evaluators for every explicit formula, parameterised by their constants.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClosedForms {
    pub consts: FormulaConstants,
}

impl ClosedForms {
    pub fn standard() -> Self {
        ClosedForms::default()
    }

    pub fn with_constants(consts: FormulaConstants) -> Self {
        ClosedForms { consts }
    }

    /// The standard formulas with one constant bumped; `None` for an unknown name.
    pub fn mutant(name: &str) -> Option<Self> {
        FormulaConstants::default()
            .mutated(name)
            .map(Self::with_constants)
    }

    fn f(&self, n: i64) -> Result<BigInt> {
        fib(n)
    }

    pub fn lucas(&self, m: i64) -> Result<BigInt> {
        if m < 1 {
            return Err(ClosedFormError::InvalidArgument(format!(
                "Lucas index {m} < 1"
            )));
        }
        Ok(self.f(m)? + self.f(m - self.consts.lucas_shift)?)
    }

    /// Members of `B_n` with no water cell: `1 + floor(n^2/4)`.
    pub fn w0(&self, n: u64) -> BigInt {
        let c = &self.consts;
        let n = BigInt::from(n);
        BigInt::from(c.w0_offset) + (&n * &n).div_floor(&BigInt::from(c.w0_divisor))
    }

    /// Members of `B_n` with exactly `k >= 1` water cells. The empty range
    /// (`k > n - 4`) gives zero.
    pub fn wnk(&self, n: u64, k: u64) -> Result<BigInt> {
        if k == 0 {
            return Err(ClosedFormError::InvalidArgument(
                "wnk needs k >= 1; use w0 for k = 0".into(),
            ));
        }
        let c = &self.consts;
        let (n, k) = (n as i64, k as i64);
        let upper = (n - k - c.wnk_range_shift).div_euclid(2);
        let mut total = BigInt::zero();
        for r in c.wnk_r_start..=upper {
            let linear = n - k - 2 * r - c.wnk_linear_shift;
            total += binomial(k + r - c.wnk_binom_shift, k) * linear;
        }
        Ok(total)
    }

    /// Sum of capacities over `B_n`.
    pub fn total_capacity(&self, n: u64) -> Result<BigInt> {
        let c = &self.consts;
        let m = n as i64;
        let num = BigInt::from(m + 1) * self.lucas(m + 1)? - self.f(m)?;
        let head = exact_div(&num, &BigInt::from(c.totcap_divisor), "total capacity", n)?;
        Ok(head - self.f(m + 1)? * c.totcap_fib_coef + m + c.totcap_offset)
    }

    /// `sum (-1)^cap` over `B_n`.
    pub fn sign_balance(&self, n: u64) -> Result<BigInt> {
        let c = &self.consts;
        let m = n as i64;
        Ok(BigInt::from(2 * m - c.signbal_offset) + sign(m) * self.f(m - c.signbal_fib_shift)?)
    }

    /// Members of `B_n` with capacity `k` and exactly `j` parts equal to 1.
    ///
    /// Requires `j <= n` and `n ≡ j (mod 2)`; gives zero when `j < k`, and
    /// when `k >= 1` with `n < j + 4`.
    pub fn bnkj(&self, n: u64, k: u64, j: u64) -> Result<BigInt> {
        if j > n {
            return Err(ClosedFormError::InvalidArgument(format!(
                "j = {j} exceeds n = {n}"
            )));
        }
        if !(n - j).is_multiple_of(2) {
            return Err(ClosedFormError::InvalidArgument(format!(
                "n = {n} and j = {j} differ in parity"
            )));
        }
        if j < k {
            return Ok(BigInt::zero());
        }
        let c = &self.consts;
        let (n, k, j) = (n as i64, k as i64, j as i64);
        if k == 0 {
            return Ok(if n == j {
                BigInt::one()
            } else {
                BigInt::from(j + c.bnkj_zero_offset)
            });
        }
        if n < j + 4 {
            return Ok(BigInt::zero());
        }
        let top = (n - j - c.bnkj_gap).div_euclid(2) + k;
        Ok(binomial(top, k) * (j - k + c.bnkj_shift))
    }

    /// Total capacity over `B_n` when every 1 carries one of `p0` colours,
    /// i.e. `sum cap * p0^tau`.
    pub fn total_capacity_colored(&self, n: u64, p0: u64) -> Result<BigInt> {
        if p0 == 0 {
            return Err(ClosedFormError::InvalidArgument(
                "p must be positive".into(),
            ));
        }
        let c = &self.consts;
        let m = n as i64;
        let p = BigInt::from(p0);
        let p2 = &p * &p;
        let fm = |k: i64| fib_poly_value(k, &p);
        let num = &p2 * m * fm(m) + &p * (c.colored_linear_coef * (m + 1)) * fm(m - 1);
        let head = exact_div(
            &num,
            &(&p2 + c.colored_divisor_shift),
            "colored total capacity",
            n,
        )?;
        let tail = Pow::pow(&p, n) * (&p2 * c.colored_tail_coef + m);
        Ok(head - &p * c.colored_fib_coef * fm(m + 1) + tail)
    }

    /// `(sum_{i<n} F_i F_{n-1-i}, (p n F_n + 2(n+1) F_{n-1})/(p^2+4))`.
    pub fn fib_conv(&self, n: u64) -> Result<(TriPoly, TriPoly)> {
        let cache = FibCache::global();
        let m = n as i64;
        let mut lhs = TriPoly::zero();
        for i in 0..m {
            lhs += &(&cache.fib_poly(i)? * &cache.fib_poly(m - i - 1)?);
        }
        let c = &self.consts;
        let num = &(&TriPoly::p() * &cache.fib_poly(m)?).scale(&BigInt::from(m))
            + &cache
                .fib_poly(m - 1)?
                .scale(&BigInt::from(c.conv_linear_coef * (m + 1)));
        let rhs = div_by_p2_plus(&num, c.conv_divisor_shift, n)?;
        Ok((lhs, rhs))
    }

    /// `(sum_{i<n} f_i f_{n-1-i}, ((n+1) L_{n+1} - f_n)/5)`: two counts of
    /// `B_n` with one marked 1.
    pub fn marked_identity(&self, n: u64) -> Result<(BigInt, BigInt)> {
        let m = n as i64;
        let mut conv = BigInt::zero();
        for i in 0..m {
            conv += self.f(i)? * self.f(m - i - 1)?;
        }
        let num = BigInt::from(m + 1) * self.lucas(m + 1)? - self.f(m)?;
        let closed = exact_div(
            &num,
            &BigInt::from(self.consts.marked_divisor),
            "marked count",
            n,
        )?;
        Ok((conv, closed))
    }

    /// Both sides of a binomial-sum identity, for `n >= 5`.
    pub fn corollary_sides(&self, n: u64, which: CorollaryIdentity) -> Result<(BigInt, BigInt)> {
        let table = BinomialTable::new(n as usize);
        self.corollary_sides_with(&table, n, which)
    }

    /// [`ClosedForms::corollary_sides`] reusing a prebuilt binomial table.
    pub fn corollary_sides_with(
        &self,
        table: &BinomialTable,
        n: u64,
        which: CorollaryIdentity,
    ) -> Result<(BigInt, BigInt)> {
        if n < 5 {
            return Err(ClosedFormError::InvalidArgument(format!(
                "binomial identities need n >= 5, got {n}"
            )));
        }
        let m = n as i64;
        let r_max = (m - 3).div_euclid(2);
        let mut lhs = BigInt::zero();
        for r in 1..=r_max {
            for k in (2 * r + 2)..m {
                let term = match which {
                    CorollaryIdentity::Count => table.get(k - r - 2, r - 1) * (m - k),
                    CorollaryIdentity::TotalCapacity => {
                        table.get(k - r - 3, r - 1) * ((m - k) * (k - r - 2))
                    }
                    CorollaryIdentity::SignBalance => {
                        sign(k - 1) * table.get(k - r - 2, r - 1) * (m - k)
                    }
                };
                lhs += term;
            }
        }
        let c = &self.consts;
        let quarter = BigInt::from(m * m / 4);
        let rhs = match which {
            CorollaryIdentity::Count => self.f(m)? - c.cor_count_offset - quarter,
            CorollaryIdentity::TotalCapacity => self.total_capacity(n)?,
            CorollaryIdentity::SignBalance => {
                BigInt::from(2 * m - c.cor_sign_offset) - quarter + sign(m) * self.f(m - 6)?
            }
        };
        Ok((lhs, rhs))
    }

    /// `|avg(n) * sqrt(5) / n - 1|` for the average capacity over `B_n`, using
    /// exact integers up to the final floating-point step.
    pub fn average_capacity_deviation(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(ClosedFormError::InvalidArgument(
                "average needs n >= 1".into(),
            ));
        }
        let total = self.total_capacity(n)?;
        let count = fib_fast_doubling(n);
        // avg / n to 30 significant digits, then one float step
        let scale = BigInt::from(10u32).pow(30u32);
        let ratio = (total * &scale) / (count * BigInt::from(n));
        let ratio: f64 = ratio.to_string().parse::<f64>().unwrap_or(f64::NAN) / 1e30;
        Ok((ratio * 5f64.sqrt() - 1.0).abs())
    }
}

pub fn w0(n: u64) -> BigInt {
    ClosedForms::standard().w0(n)
}

pub fn wnk(n: u64, k: u64) -> Result<BigInt> {
    ClosedForms::standard().wnk(n, k)
}

pub fn total_capacity(n: u64) -> Result<BigInt> {
    ClosedForms::standard().total_capacity(n)
}

pub fn sign_balance(n: u64) -> Result<BigInt> {
    ClosedForms::standard().sign_balance(n)
}

pub fn bnkj(n: u64, k: u64, j: u64) -> Result<BigInt> {
    ClosedForms::standard().bnkj(n, k, j)
}

pub fn total_capacity_colored(n: u64, p0: u64) -> Result<BigInt> {
    ClosedForms::standard().total_capacity_colored(n, p0)
}

pub fn fib_conv(n: u64) -> Result<(TriPoly, TriPoly)> {
    ClosedForms::standard().fib_conv(n)
}

pub fn marked_identity(n: u64) -> Result<(BigInt, BigInt)> {
    ClosedForms::standard().marked_identity(n)
}

pub fn corollary_sides(n: u64, which: CorollaryIdentity) -> Result<(BigInt, BigInt)> {
    ClosedForms::standard().corollary_sides(n, which)
}

/// `|avg(n) * sqrt(5) / n - 1|` for the average capacity over `B_n`.
pub fn average_capacity_deviation(n: u64) -> Result<f64> {
    ClosedForms::standard().average_capacity_deviation(n)
}
