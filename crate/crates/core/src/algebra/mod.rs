//! Exact arithmetic substrate: `BigInt` scalars, sparse polynomials in
//! `(y, p, q)`, and truncated power series in `x` over those polynomials.

mod poly;
mod series;

pub use num_bigint::BigInt;
pub use poly::{Monomial, PolyJson, TermJson, TriPoly, Var};
pub use series::{SeriesError, XSeries, DEFAULT_ORDER};
