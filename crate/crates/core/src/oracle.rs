//! Ground truth by exhaustion: the census of all `(2n-1)!!` gluings, plus
//! character-sum and series-identity cross-checks used to validate the
//! closed-form routes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::characters::{chi_hook_general, mn_character, HookShape};
use crate::error::{domain, Error, Result};
use crate::exact_arith::{
    binomial, double_factorial, factorial, stirling_cycle, ExactInt, ExactPoly, ExactRat,
};
use crate::genus_distribution::GenusDistribution;
use crate::permutations::{class_elements, class_size, cycle_count_of, CycleType, Matchings, Permutation};

/// Largest `n` the exhaustive census accepts by default (`15!!` gluings).
pub const DEFAULT_ORACLE_LIMIT: usize = 8;

/// Number of gluings of the `2n`-gon by vertex count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingCensus {
    n: usize,
    counts: BTreeMap<usize, u64>,
}

impl GluingCensus {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertex count `ν` to number of matchings producing it.
    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Matchings per genus `g = (n + 1 - ν) / 2`. An odd `n + 1 - ν` would
    /// mean a non-orientable or disconnected result and is reported as an
    /// internal error.
    pub fn genus_counts(&self) -> Result<BTreeMap<usize, u64>> {
        let mut out = BTreeMap::new();
        for (&nu, &c) in &self.counts {
            let excess = (self.n + 1)
                .checked_sub(nu)
                .ok_or_else(|| Error::Internal(format!("{nu} vertices exceed n + 1 = {}", self.n + 1)))?;
            if excess % 2 == 1 {
                return Err(Error::Internal(format!(
                    "n + 1 - V = {excess} is odd for n = {}",
                    self.n
                )));
            }
            out.insert(excess / 2, c);
        }
        Ok(out)
    }

    /// The census normalized by `(2n - 1)!!`.
    pub fn distribution(&self) -> Result<GenusDistribution> {
        let total = double_factorial(2 * self.n as i64 - 1)?;
        if BigInt::from(self.total()) != total {
            return Err(Error::Internal(format!(
                "census of n = {} has {} gluings, expected {total}",
                self.n,
                self.total()
            )));
        }
        let probs = (1..=self.n + 1)
            .map(|nu| {
                let c = self.counts.get(&nu).copied().unwrap_or(0);
                ExactRat::new(BigInt::from(c), total.clone())
            })
            .collect();
        GenusDistribution::from_probs(self.n, probs)
    }
}

/// Census over all matchings `α` of `cycle_count(α ∘ β_0)`, with `β_0` the
/// canonical boundary cycle `1 -> 2 -> .. -> 2n -> 1`.
pub fn enumerate_census(n: usize, limit: usize) -> Result<GluingCensus> {
    census_with_boundary(n, &Permutation::full_cycle(2 * n), limit)
}

/// Census with an arbitrary fixed boundary permutation `β` of `[2n]`.
///
/// Streams matchings shard by shard (one shard per partner of point `0`),
/// so memory stays `O(n)`; shard tallies are summed exactly.
pub fn census_with_boundary(n: usize, beta: &Permutation, limit: usize) -> Result<GluingCensus> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "oracle size n",
            value: n as u128,
            limit: limit as u128,
        });
    }
    let size = 2 * n;
    if beta.degree() != size {
        return Err(Error::SizeMismatch {
            left: size,
            right: beta.degree(),
        });
    }
    let beta = beta.images();
    let tallies: Vec<Vec<u64>> = (1..size)
        .into_par_iter()
        .map(|partner| {
            let mut shard = Matchings::with_first_partner(size, partner).expect("valid shard");
            let mut tally = vec![0u64; size + 1];
            let mut gamma = vec![0usize; size];
            let mut seen = vec![false; size];
            while let Some(mates) = shard.next_mates() {
                for (g, &b) in gamma.iter_mut().zip(beta) {
                    *g = mates[b];
                }
                tally[cycle_count_of(&gamma, &mut seen)] += 1;
            }
            tally
        })
        .collect();
    let mut counts = BTreeMap::new();
    for nu in 0..=size {
        let c: u64 = tallies.iter().map(|t| t[nu]).sum();
        if c > 0 {
            counts.insert(nu, c);
        }
    }
    Ok(GluingCensus { n, counts })
}

/// `Σ_{s ∈ C_ν} χ^{hook}(s)`, computed both as `|C_ν| · χ^{hook}(C_ν)` with
/// the closed-form hook character and by summing the Murnaghan–Nakayama
/// character over an explicit enumeration of the class. The two must agree.
pub fn class_character_sum(h: HookShape, t: &CycleType) -> Result<ExactInt> {
    const CLASS_BUDGET: u64 = 40_320;
    if t.degree() > 8 {
        return Err(Error::LimitExceeded {
            what: "class-sum degree N",
            value: t.degree() as u128,
            limit: 8,
        });
    }
    let closed = class_size(t) * chi_hook_general(h, t)?;
    let lam = h.partition();
    let mut explicit = BigInt::zero();
    for s in class_elements(t, CLASS_BUDGET)? {
        explicit += mn_character(&lam, &s.cycle_type())?;
    }
    if closed != explicit {
        return Err(Error::Internal(format!(
            "class sum of hook arm {} on {t}: {closed} vs {explicit}",
            h.arm()
        )));
    }
    Ok(closed)
}

// Truncated trivariate series: xs[i][v] is the coefficient of x^i y^v, a
// polynomial in ξ truncated at the same order as x.
type TriSeries = Vec<Vec<ExactPoly>>;

fn x_series_mul(a: &[ExactPoly], b: &[ExactPoly], order: usize) -> Result<Vec<ExactPoly>> {
    let mut out = vec![ExactPoly::zero(order); order + 1];
    for (i, p) in a.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in b.iter().enumerate().take(order + 1 - i) {
            if !q.is_zero() {
                out[i + j] = out[i + j].checked_add(&p.checked_mul(q)?)?;
            }
        }
    }
    Ok(out)
}

/// `exp(-y Σ_{r<=R} x^r (1 - ξ^r) / r)` through `x^R`, expanded as
/// `Σ_v (-y)^v S^v / v!`.
fn exponential_side(order: usize) -> Result<TriSeries> {
    let d = order;
    let s: Vec<ExactPoly> = (0..=d)
        .map(|r| {
            if r == 0 {
                Ok(ExactPoly::zero(d))
            } else {
                Ok(ExactPoly::one_minus_power(r, 1, d)?
                    .scale(&ExactRat::new(BigInt::from(1), BigInt::from(r))))
            }
        })
        .collect::<Result<_>>()?;
    let mut out: TriSeries = (0..=d).map(|i| vec![ExactPoly::zero(d); i + 1]).collect();
    let mut power: Vec<ExactPoly> = (0..=d)
        .map(|i| {
            if i == 0 {
                ExactPoly::one(d)
            } else {
                ExactPoly::zero(d)
            }
        })
        .collect();
    for v in 0..=d {
        let mut c = ExactRat::new(BigInt::from(1), factorial(v));
        if v % 2 == 1 {
            c = -c;
        }
        for (row, p) in out.iter_mut().zip(&power).skip(v) {
            row[v] = p.scale(&c);
        }
        power = x_series_mul(&power, &s, d)?;
    }
    Ok(out)
}

/// `((1 - x)/(1 - xξ))^y` through `x^R`, via
/// `[y^v] = Σ_ℓ s(ℓ,v)/ℓ! (x(ξ-1)/(1-x))^ℓ`.
fn stirling_side(order: usize) -> Result<TriSeries> {
    let d = order;
    let mut out: TriSeries = (0..=d).map(|i| vec![ExactPoly::zero(d); i + 1]).collect();
    out[0][0] = ExactPoly::one(d);
    if d == 0 {
        return Ok(out);
    }
    let xi_minus_one = ExactPoly::from_ints(&[-1, 1], d)?;
    for (i, row) in out.iter_mut().enumerate().skip(1) {
        for (v, cell) in row.iter_mut().enumerate() {
            let mut acc = ExactPoly::zero(d);
            for l in v.max(1)..=i {
                let w = ExactRat::new(
                    stirling_cycle(l, v) * binomial(i as i64 - 1, (i - l) as i64),
                    factorial(l),
                );
                acc = acc.checked_add(&xi_minus_one.checked_pow(l as u32)?.scale(&w))?;
            }
            *cell = acc;
        }
    }
    Ok(out)
}

/// Checks the exponential-formula step behind the hook inversion:
/// `exp(-Σ_{r<=R} y x^r (1-ξ^r)/r)` and `((1-x)/(1-xξ))^y` agree through `x^R`.
pub fn check_exponential_formula(order: usize) -> Result<()> {
    let lhs = exponential_side(order)?;
    let rhs = stirling_side(order)?;
    for i in 0..=order {
        for v in 0..=i {
            if lhs[i][v] != rhs[i][v] {
                return Err(Error::Internal(format!(
                    "exponential formula fails at x^{i} y^{v}"
                )));
            }
        }
    }
    Ok(())
}

/// `A(n, ν, arm)` by direct triple coefficient extraction from
/// `ξ/(1-ξ) · exp(-y Σ_r x^r (1-ξ^r)/r)`, independent of the finite-sum form.
pub fn a_coefficient_by_series(n: usize, nu: usize, arm: usize) -> Result<ExactRat> {
    let d = 2 * n;
    if n == 0 || nu == 0 || arm == 0 || arm > d {
        return domain(format!("A({n}, {nu}, {arm}) out of range"));
    }
    if nu > d {
        return Ok(ExactRat::zero());
    }
    let lhs = exponential_side(d)?;
    let kernel = ExactPoly::geometric(d).shift(1);
    Ok(kernel.checked_mul(&lhs[d][nu])?.coeff(arm)?.clone())
}
