//! Exact genus distribution of random polygon gluings.
//!
//! Gluing the `2n` sides of an oriented polygon by a uniformly random
//! matching produces a one-face map on a closed oriented surface. Its vertex
//! count `X_n` is the number of cycles of `γ = αβ`, where `α` is the matching
//! (a fixed-point-free involution) and `β` the boundary `2n`-cycle; the genus
//! is `(n + 1 - X_n) / 2`.
//!
//! The crate computes the law of `X_n` exactly along four independent routes
//! and checks that they agree:
//!
//! * character theory: hook characters of `S_2n` and a Fourier inversion
//!   restricted to hooks ([`genus_distribution::dist_via_theorem`]);
//! * an explicit Stirling-number sum ([`genus_distribution::dist_via_stirling`]);
//! * coefficient extraction from `((1+x)/(1-x))^y`
//!   ([`genus_distribution::dist_via_hz`]);
//! * brute-force enumeration of all `(2n-1)!!` gluings
//!   ([`oracle::enumerate_census`]).
//!
//! [`montecarlo`] estimates the same law by sampling, for sizes past the
//! reach of enumeration.

pub mod characters;
mod error;
pub mod exact_arith;
pub mod genus_distribution;
pub mod group_fourier;
pub mod montecarlo;
pub mod oracle;
pub mod permutations;

pub use error::{Error, Result};
