//! Exact computation of the water-cell capacity statistic on compositions
//! with parts in `{1, 2}`.
//!
//! Every sequence is reachable along several independent routes: exhaustive
//! enumeration ([`brute`]), linear recurrences ([`recurrences`]), generating
//! function expansion ([`genfunc`]), explicit formulas ([`closed_forms`]) and
//! executable bijections ([`bijections`]). The [`verify`] module cross-checks
//! them against each other.

pub mod algebra;
pub mod bijections;
pub mod brute;
pub mod closed_forms;
pub mod composition;
pub mod enumerate;
pub mod genfunc;
pub mod recurrences;
pub mod verify;

pub use composition::{Composition, CompositionError, StatProfile};
