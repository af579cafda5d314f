//! Exact arithmetic: big integers and rationals, the special numbers the
//! gluing formulas are built from, and dense truncated power series.
//!
//! Nothing in this crate rounds. Every probability is a [`ExactRat`] in
//! lowest terms and every count is an [`ExactInt`].

pub mod identities;
mod poly;
mod series;
mod special;

pub use poly::ExactPoly;
pub use series::{hz_series, log_ratio_series, BivariateSeries};
pub use special::{
    binomial, double_factorial, factorial, pow2, sign, stirling_cycle, to_rat, ExactInt, ExactRat,
};
