//! Monte Carlo estimate of the law of `X_n` and its distance to the exact law.
//!
//! Samples are split into fixed-size shards. Shard `i` draws from
//! `ChaCha8Rng::seed_from_u64(seed)` switched to stream `i`, so a report
//! depends only on `(n, samples, seed, boundary)` and never on the number of
//! worker threads.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{domain, Error, Result};
use crate::exact_arith::ExactRat;
use crate::genus_distribution::dist_via_stirling;
use crate::permutations::{cycle_count_of, sample_matching, sample_unicyclic, Permutation};

/// Samples per RNG stream.
pub const SHARD_SIZE: u64 = 1 << 14;

/// How the polygon boundary `β` is chosen for each sample.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Boundary {
    /// The canonical cycle `1 -> 2 -> .. -> 2n -> 1` every time.
    #[default]
    Fixed,
    /// A fresh uniform `2n`-cycle per sample.
    UniformUnicyclic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McConfig {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub boundary: Boundary,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub threads: Option<usize>,
}

impl McConfig {
    pub fn new(n: usize, samples: u64, seed: u64) -> Self {
        McConfig {
            n,
            samples,
            seed,
            boundary: Boundary::Fixed,
            threads: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct McReport {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub boundary: Boundary,
    /// Vertex count `ν` to number of samples.
    pub counts: BTreeMap<usize, u64>,
    /// `½ Σ_ν |count_ν / samples - P(X_n = ν)|`, exact.
    pub tv_distance: ExactRat,
    /// Pearson statistic over the outcomes with positive exact probability.
    pub chi_square: f64,
    pub degrees_of_freedom: usize,
    pub chi_square_p_value: f64,
    pub empirical_mean: ExactRat,
    pub exact_mean: ExactRat,
    pub exact_variance: ExactRat,
}

impl McReport {
    pub fn tv(&self) -> f64 {
        self.tv_distance.to_f64().unwrap_or(f64::NAN)
    }

    /// `|empirical mean - E[X_n]|` in units of the standard error.
    pub fn mean_z_score(&self) -> f64 {
        let diff = (&self.empirical_mean - &self.exact_mean).abs();
        if diff.is_zero() {
            return 0.0;
        }
        let var = self.exact_variance.to_f64().unwrap_or(0.0);
        let se = (var / self.samples as f64).sqrt();
        diff.to_f64().unwrap_or(f64::INFINITY) / se
    }

    /// True when the empirical mean lies within `k` standard errors.
    pub fn mean_within(&self, k: f64) -> bool {
        self.mean_z_score() <= k
    }
}

fn shard_rng(seed: u64, shard: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    rng
}

fn run_shard(n_total: usize, take: u64, mut rng: ChaCha8Rng, boundary: Boundary) -> Vec<u64> {
    let canonical = Permutation::full_cycle(n_total);
    let mut tally = vec![0u64; n_total + 1];
    let mut gamma = vec![0usize; n_total];
    let mut seen = vec![false; n_total];
    for _ in 0..take {
        let alpha = sample_matching(n_total, &mut rng).expect("even size");
        let fresh;
        let beta = match boundary {
            Boundary::Fixed => &canonical,
            Boundary::UniformUnicyclic => {
                fresh = sample_unicyclic(n_total, &mut rng).expect("nonempty");
                &fresh
            }
        };
        for (g, &b) in gamma.iter_mut().zip(beta.images()) {
            *g = alpha.apply(b);
        }
        tally[cycle_count_of(&gamma, &mut seen)] += 1;
    }
    tally
}

pub fn run_mc(n: usize, samples: u64, seed: u64) -> Result<McReport> {
    run_mc_with(&McConfig::new(n, samples, seed))
}

pub fn run_mc_with(config: &McConfig) -> Result<McReport> {
    let McConfig {
        n,
        samples,
        seed,
        boundary,
        threads,
    } = *config;
    if samples == 0 {
        return domain("need at least one sample");
    }
    let exact = dist_via_stirling(n)?;
    let n_total = 2 * n;
    let shards = samples.div_ceil(SHARD_SIZE);

    let work = || -> Vec<Vec<u64>> {
        (0..shards)
            .into_par_iter()
            .map(|i| {
                let take = SHARD_SIZE.min(samples - i * SHARD_SIZE);
                run_shard(n_total, take, shard_rng(seed, i), boundary)
            })
            .collect()
    };
    let tallies = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };

    let mut counts = BTreeMap::new();
    for nu in 0..=n_total {
        let c: u64 = tallies.iter().map(|t| t[nu]).sum();
        if c > 0 {
            counts.insert(nu, c);
        }
    }

    let total = BigInt::from(samples);
    let mut tv = ExactRat::zero();
    let mut chi_square = 0.0;
    let mut cells = 0usize;
    let mut empirical_sum = BigInt::zero();
    for nu in 1..=n_total {
        let observed = counts.get(&nu).copied().unwrap_or(0);
        let p = exact.prob(nu);
        if p.is_zero() && observed > 0 {
            return Err(Error::Internal(format!(
                "sampled X_{n} = {nu}, which has probability zero"
            )));
        }
        empirical_sum += BigInt::from(observed) * nu;
        tv += (ExactRat::new(BigInt::from(observed), total.clone()) - &p).abs();
        if !p.is_zero() {
            let expected = p.to_f64().unwrap_or(0.0) * samples as f64;
            chi_square += (observed as f64 - expected).powi(2) / expected;
            cells += 1;
        }
    }
    tv /= ExactRat::from_integer(BigInt::from(2));
    let dof = cells.saturating_sub(1);
    let p_value = if dof == 0 {
        1.0
    } else {
        ChiSquared::new(dof as f64)
            .map(|d| d.sf(chi_square))
            .unwrap_or(f64::NAN)
    };

    Ok(McReport {
        n,
        samples,
        seed,
        boundary,
        counts,
        tv_distance: tv,
        chi_square,
        degrees_of_freedom: dof,
        chi_square_p_value: p_value,
        empirical_mean: ExactRat::new(empirical_sum, total),
        exact_mean: exact.mean(),
        exact_variance: exact.variance(),
    })
}
