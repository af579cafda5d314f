//! The law of `X_n`, the vertex count of a uniformly random gluing of the
//! `2n`-gon (equivalently the number of cycles of `γ = αβ`), by three
//! closed-form routes, plus the derived genus counts `ε_g(n)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::characters::{f_weight, HookShape};
use crate::error::{domain, Error, Result};
use crate::exact_arith::{
    binomial, double_factorial, factorial, hz_series, pow2, sign, stirling_cycle, ExactInt, ExactPoly,
    ExactRat,
};

/// Exact law of `X_n` on `ν ∈ [1, n + 1]`.
///
/// `X_n = n + 1 - 2 G_n` where `G_n` is the genus, so only `ν ≡ n + 1 (mod 2)`
/// carries mass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusDistribution {
    n: usize,
    // probs[ν - 1] = P(X_n = ν)
    probs: Vec<ExactRat>,
}

impl GenusDistribution {
    /// From `P(X_n = ν)` for `ν = 1 ..= n + 1`. Call [`Self::validate`] to
    /// check that the values form a gluing law.
    pub fn from_probs(n: usize, probs: Vec<ExactRat>) -> Result<Self> {
        if probs.len() != n + 1 {
            return Err(Error::SizeMismatch {
                left: n + 1,
                right: probs.len(),
            });
        }
        Ok(GenusDistribution { n, probs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `P(X_n = ν)`; zero outside `[1, n + 1]`.
    pub fn prob(&self, nu: usize) -> ExactRat {
        if nu == 0 {
            return ExactRat::zero();
        }
        self.probs.get(nu - 1).cloned().unwrap_or_else(ExactRat::zero)
    }

    /// `(ν, P(X_n = ν))` for `ν = 1 ..= n + 1`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &ExactRat)> + '_ {
        self.probs.iter().enumerate().map(|(i, p)| (i + 1, p))
    }

    /// `P(G_n = g)` for every admissible genus `g`, i.e. `n + 1 - 2g >= 1`.
    pub fn genus_probs(&self) -> BTreeMap<usize, ExactRat> {
        (0..=self.n / 2)
            .map(|g| (g, self.prob(self.n + 1 - 2 * g)))
            .collect()
    }

    /// `ε_g(n) = (2n - 1)!! P(G_n = g)`, required to be integral.
    pub fn epsilon_counts(&self) -> Result<BTreeMap<usize, ExactInt>> {
        let total = ExactRat::from_integer(double_factorial(2 * self.n as i64 - 1)?);
        self.genus_probs()
            .into_iter()
            .map(|(g, p)| {
                let e = p * &total;
                if !e.is_integer() {
                    return Err(Error::Internal(format!(
                        "epsilon_{g}({}) = {e} is not an integer",
                        self.n
                    )));
                }
                Ok((g, e.to_integer()))
            })
            .collect()
    }

    pub fn total_mass(&self) -> ExactRat {
        self.probs.iter().sum()
    }

    pub fn mean(&self) -> ExactRat {
        self.iter()
            .map(|(nu, p)| p * ExactRat::from_integer(BigInt::from(nu)))
            .sum()
    }

    pub fn variance(&self) -> ExactRat {
        let m = self.mean();
        let second: ExactRat = self
            .iter()
            .map(|(nu, p)| p * ExactRat::from_integer(BigInt::from(nu * nu)))
            .sum();
        second - &m * &m
    }

    /// Checks total mass one, nonnegativity, and parity support.
    pub fn validate(&self) -> Result<()> {
        if !self.total_mass().is_one() {
            return Err(Error::Internal(format!(
                "total mass of X_{} is {}",
                self.n,
                self.total_mass()
            )));
        }
        for (nu, p) in self.iter() {
            if p.is_negative() {
                return Err(Error::Internal(format!("P(X_{} = {nu}) = {p} < 0", self.n)));
            }
            if (nu + self.n + 1) % 2 == 1 && !p.is_zero() {
                return Err(Error::Internal(format!(
                    "P(X_{} = {nu}) = {p} violates parity support",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return domain("n must be at least 1");
    }
    Ok(())
}

/// `A(n, ν, arm) = [x^2n y^ν ξ^arm] ξ/(1-ξ) ((1-x)/(1-xξ))^y`, as the finite sum
/// `(-1)^(arm-1) C(2n-1, 2n-arm) Σ_{ℓ=ν}^{2n} (-1)^ℓ s(ℓ,ν)/ℓ! C(2n-arm, 2n-ℓ)`.
pub fn a_coefficient(n: usize, nu: usize, arm: usize) -> Result<ExactRat> {
    check_n(n)?;
    let two_n = 2 * n;
    if nu == 0 || arm == 0 || arm > two_n {
        return domain(format!(
            "A({n}, {nu}, {arm}) needs nu >= 1 and 1 <= arm <= {two_n}"
        ));
    }
    let mut sum = ExactRat::zero();
    for l in nu..=two_n {
        let c = binomial((two_n - arm) as i64, (two_n - l) as i64);
        if c.is_zero() {
            continue;
        }
        let term = ExactRat::new(stirling_cycle(l, nu) * c, factorial(l));
        if l % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let outer = binomial(two_n as i64 - 1, (two_n - arm) as i64) * sign(arm as i64 - 1);
    Ok(sum * ExactRat::from_integer(outer))
}

/// Contribution of one hook to `P(X_n = ν)`: `(-1)^leg F(2n, arm) A(n, ν, arm)`.
fn hook_term(n: usize, nu: usize, arm: usize) -> Result<ExactRat> {
    let leg = HookShape::new(2 * n, arm)?.leg();
    let f = f_weight(2 * n, arm)?;
    let signed = if leg % 2 == 0 { f } else { -f };
    Ok(signed * a_coefficient(n, nu, arm)?)
}

/// `P(X_n = ν)` from the hook-character inversion, summed over all `2n` arms.
/// Defined for every `ν >= 1`; it vanishes for `ν > n + 1`.
pub fn theorem_point(n: usize, nu: usize) -> Result<ExactRat> {
    check_n(n)?;
    (1..=2 * n).map(|arm| hook_term(n, nu, arm)).sum()
}

/// Law of `X_n` via hook characters and the `A` coefficients.
pub fn dist_via_theorem(n: usize) -> Result<GenusDistribution> {
    check_n(n)?;
    let probs = (1..=n + 1)
        .map(|nu| theorem_point(n, nu))
        .collect::<Result<_>>()?;
    GenusDistribution::from_probs(n, probs)
}

/// Even-arm and odd-arm parts of [`theorem_point`].
pub fn even_odd_split(n: usize, nu: usize) -> Result<(ExactRat, ExactRat)> {
    check_n(n)?;
    if nu == 0 {
        return domain("nu must be at least 1");
    }
    let mut even = ExactRat::zero();
    let mut odd = ExactRat::zero();
    for arm in 1..=2 * n {
        let t = hook_term(n, nu, arm)?;
        if arm % 2 == 0 {
            even += t;
        } else {
            odd += t;
        }
    }
    Ok((even, odd))
}

fn stirling_sum(nu: usize, top: usize, mut weight: impl FnMut(usize) -> ExactRat) -> ExactRat {
    (nu.max(1)..=top)
        .map(|l| ExactRat::new(stirling_cycle(l, nu), factorial(l)) * weight(l))
        .sum()
}

/// Closed form of the even-arm part:
/// `Σ_ℓ (-1)^(ℓ+n-1) 2^(ℓ-2) s(ℓ,ν)/ℓ! C(n-1, ℓ-2)`.
pub fn even_closed_form(n: usize, nu: usize) -> Result<ExactRat> {
    check_n(n)?;
    let n_i = n as i64;
    Ok(stirling_sum(nu, n + 1, |l| {
        let l = l as i64;
        pow2(l - 2) * ExactRat::from_integer(binomial(n_i - 1, l - 2) * sign(l + n_i - 1))
    }))
}

/// Closed form of the odd-arm part:
/// `Σ_ℓ (-1)^(ℓ+n-1) s(ℓ,ν)/ℓ! [2^(ℓ-2) C(n-1, ℓ-2) + 2^(ℓ-1) C(n-1, ℓ-1)]`.
pub fn odd_closed_form(n: usize, nu: usize) -> Result<ExactRat> {
    check_n(n)?;
    let n_i = n as i64;
    Ok(stirling_sum(nu, n + 1, |l| {
        let l = l as i64;
        let bracket = pow2(l - 2) * ExactRat::from_integer(binomial(n_i - 1, l - 2))
            + pow2(l - 1) * ExactRat::from_integer(binomial(n_i - 1, l - 1));
        bracket * ExactRat::from_integer(BigInt::from(sign(l + n_i - 1)))
    }))
}

/// `P(X_n = ν) = Σ_{ℓ >= ν} (-1)^(ℓ+n-1) 2^(ℓ-1) s(ℓ,ν)/ℓ! C(n, ℓ-1)`.
pub fn stirling_point(n: usize, nu: usize) -> Result<ExactRat> {
    check_n(n)?;
    let n_i = n as i64;
    Ok(stirling_sum(nu, n + 1, |l| {
        let l = l as i64;
        pow2(l - 1) * ExactRat::from_integer(binomial(n_i, l - 1) * sign(l + n_i - 1))
    }))
}

/// Law of `X_n` via the explicit Stirling-number formula. Cheapest route.
pub fn dist_via_stirling(n: usize) -> Result<GenusDistribution> {
    check_n(n)?;
    let probs = (1..=n + 1)
        .map(|nu| stirling_point(n, nu))
        .collect::<Result<_>>()?;
    GenusDistribution::from_probs(n, probs)
}

/// Law of `X_n` read off `E[y^X_n] = ½ [x^(n+1)] (((1+x)/(1-x))^y - 1)`.
///
/// Accepts `n = 0`, giving the boundary convention `X_0 = 1`.
pub fn dist_via_hz(n: usize) -> Result<GenusDistribution> {
    let series = hz_series(n.max(1))?;
    let row = series.x_coeff(n + 1)?;
    if !row[0].is_zero() {
        return Err(Error::Internal(format!(
            "[x^{} y^0] of the generating function is {}",
            n + 1,
            row[0]
        )));
    }
    let half = ExactRat::new(BigInt::one(), BigInt::from(2));
    let probs = row[1..].iter().map(|c| c * &half).collect();
    GenusDistribution::from_probs(n, probs)
}

/// `ε_g(n)` for `g = 0 ..= n/2`, from the Stirling route.
pub fn epsilon_counts(n: usize) -> Result<BTreeMap<usize, ExactInt>> {
    dist_via_stirling(n)?.epsilon_counts()
}

/// `E[X_n]` as `∂/∂y` of the generating function at `y = 1`:
/// `½ [x^(n+1)] ((1+x)/(1-x)) log((1+x)/(1-x))`.
pub fn hz_mean(n: usize) -> Result<ExactRat> {
    let d = n + 1;
    let ratio = ExactPoly::from_coeffs(
        (0..=d)
            .map(|k| ExactRat::from_integer(BigInt::from(if k == 0 { 1 } else { 2 })))
            .collect(),
        d,
    )?;
    let log = crate::exact_arith::log_ratio_series(d);
    let prod = ratio.checked_mul(&log)?;
    Ok(prod.coeff(d)? / ExactRat::from_integer(BigInt::from(2)))
}
