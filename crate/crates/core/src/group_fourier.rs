//! Laws of products of independent uniform conjugacy-class elements, by
//! character sums and by brute-force convolution.
//!
//! If `σ_j` is uniform on the class `C_j`, independently for `j = 1..k`,
//! the product `σ = σ_1 σ_2 .. σ_k` has point masses
//!
//! ```text
//! P(σ = s) = (1/N!) Σ_λ (f^λ)^(1-k) χ^λ(s) Π_j χ^λ(C_j)
//! ```
//!
//! and the number of `k`-tuples multiplying to the identity is
//! `Π|C_j| / N! · Σ_λ (f^λ)^(2-k) Π_j χ^λ(C_j)`. Both are class functions,
//! so everything here is keyed by cycle type.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::characters::{chi_hook_general, f_weight, CharacterTable, HookShape};
use crate::error::{domain, Error, Result};
use crate::exact_arith::{factorial, ExactInt, ExactRat};
use crate::permutations::{class_elements, class_size, CycleType, Permutation};

/// Largest `N` for which the full partition sweep is attempted by default.
pub const DEFAULT_FOURIER_LIMIT: usize = 10;
/// Default cap on the number of tuples a brute-force convolution may visit.
pub const DEFAULT_BRUTEFORCE_BUDGET: u64 = 10_000_000;

/// The law of `σ_1 .. σ_k` with `σ_j` uniform on `classes[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassProductLaw {
    classes: Vec<CycleType>,
}

impl ClassProductLaw {
    pub fn new(classes: Vec<CycleType>) -> Result<Self> {
        let Some(first) = classes.first() else {
            return domain("a product law needs at least one class");
        };
        let n = first.degree();
        if let Some(bad) = classes.iter().find(|c| c.degree() != n) {
            return Err(Error::SizeMismatch {
                left: n,
                right: bad.degree(),
            });
        }
        Ok(ClassProductLaw { classes })
    }

    /// Matching times boundary cycle: the law of `γ = αβ` for the `N`-gon.
    pub fn gluing(n_total: usize) -> Result<Self> {
        Self::new(vec![
            CycleType::involution(n_total)?,
            CycleType::full_cycle(n_total),
        ])
    }

    pub fn degree(&self) -> usize {
        self.classes[0].degree()
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// `Π_j |C_j|`.
    pub fn tuple_count(&self) -> ExactInt {
        self.classes.iter().map(class_size).product()
    }
}

fn table_for(law: &ClassProductLaw, limit: usize) -> Result<std::sync::Arc<CharacterTable>> {
    let n = law.degree();
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "symmetric group degree N",
            value: n as u128,
            limit: limit as u128,
        });
    }
    Ok(CharacterTable::cached(n))
}

/// `P(σ_1 .. σ_k = s)` for a permutation of the given cycle type.
pub fn product_law_at_type(law: &ClassProductLaw, s_type: &CycleType, limit: usize) -> Result<ExactRat> {
    if s_type.degree() != law.degree() {
        return Err(Error::SizeMismatch {
            left: law.degree(),
            right: s_type.degree(),
        });
    }
    let table = table_for(law, limit)?;
    let col = |t: &CycleType| table.class_index(t).expect("table covers every class");
    let s_col = col(s_type);
    let cols: Vec<usize> = law.classes().iter().map(col).collect();
    let k = law.k() as i64;

    let mut total = ExactRat::zero();
    for (row, dim) in table.dimensions().iter().enumerate() {
        let mut term: ExactInt = table.value(row, s_col).clone();
        for &c in &cols {
            term *= table.value(row, c);
        }
        if term.is_zero() {
            continue;
        }
        total += dim_power(dim, 1 - k) * ExactRat::from_integer(term);
    }
    Ok(total / ExactRat::from_integer(factorial(law.degree())))
}

/// `P(σ_1 .. σ_k = s)`.
pub fn product_law_pointmass(law: &ClassProductLaw, s: &Permutation, limit: usize) -> Result<ExactRat> {
    product_law_at_type(law, &s.cycle_type(), limit)
}

fn dim_power(dim: &ExactInt, e: i64) -> ExactRat {
    let p = dim.pow(e.unsigned_abs() as u32);
    if e >= 0 {
        ExactRat::from_integer(p)
    } else {
        ExactRat::new(BigInt::one(), p)
    }
}

/// Point mass of `γ = αβ` (matching times `N`-cycle) at a permutation of
/// type `s_type`, using only the `N` hook characters:
/// `P_γ(s) = (1/N!) Σ_arm F(N, arm) χ^{hook}(s)`.
pub fn hook_only_law(s_type: &CycleType) -> Result<ExactRat> {
    let n = s_type.degree();
    if n % 2 == 1 {
        return domain(format!("N = {n} is odd; the gluing law needs even N"));
    }
    let mut total = ExactRat::zero();
    for h in HookShape::all(n) {
        let chi = chi_hook_general(h, s_type)?;
        if !chi.is_zero() {
            total += f_weight(n, h.arm())? * ExactRat::from_integer(chi);
        }
    }
    Ok(total / ExactRat::from_integer(factorial(n)))
}

/// Number of tuples `(s_1, .., s_k) ∈ C_1 × .. × C_k` with `s_1 .. s_k = id`,
/// by the Frobenius character sum.
pub fn frobenius_count(law: &ClassProductLaw, limit: usize) -> Result<ExactInt> {
    let table = table_for(law, limit)?;
    let cols: Vec<usize> = law
        .classes()
        .iter()
        .map(|t| table.class_index(t).expect("table covers every class"))
        .collect();
    let k = law.k() as i64;
    let mut sum = ExactRat::zero();
    for (row, dim) in table.dimensions().iter().enumerate() {
        let mut term = BigInt::one();
        for &c in &cols {
            term *= table.value(row, c);
        }
        if !term.is_zero() {
            sum += dim_power(dim, 2 - k) * ExactRat::from_integer(term);
        }
    }
    let count = sum * ExactRat::new(law.tuple_count(), factorial(law.degree()));
    if !count.is_integer() || count.is_negative() {
        return Err(Error::Internal(format!(
            "Frobenius count {count} for {:?} is not a nonnegative integer",
            law.classes()
        )));
    }
    Ok(count.to_integer())
}

/// Exhaustive census of the product's cycle type over all tuples of the
/// classes. Refuses if the number of tuples exceeds `budget`.
pub fn bruteforce_counts(law: &ClassProductLaw, budget: u64) -> Result<BTreeMap<CycleType, u64>> {
    let tuples = law.tuple_count().to_u64().unwrap_or(u64::MAX);
    if tuples > budget {
        return Err(Error::LimitExceeded {
            what: "tuple count",
            value: tuples as u128,
            limit: budget as u128,
        });
    }
    let elements: Vec<Vec<Permutation>> = law
        .classes()
        .iter()
        .map(|t| class_elements(t, budget))
        .collect::<Result<_>>()?;
    let (first, rest) = elements.split_first().expect("k >= 1");

    let merged = first
        .par_iter()
        .map(|head| {
            let mut tally: HashMap<CycleType, u64> = HashMap::new();
            tally_tail(head.clone(), rest, &mut tally);
            tally
        })
        .reduce(HashMap::new, |mut a, b| {
            for (t, c) in b {
                *a.entry(t).or_default() += c;
            }
            a
        });
    Ok(merged.into_iter().collect())
}

fn tally_tail(prefix: Permutation, rest: &[Vec<Permutation>], tally: &mut HashMap<CycleType, u64>) {
    match rest.split_first() {
        None => *tally.entry(prefix.cycle_type()).or_default() += 1,
        Some((next, tail)) => {
            for s in next {
                let p = prefix.compose(s).expect("common degree");
                tally_tail(p, tail, tally);
            }
        }
    }
}

/// Exhaustive law of the product: `P(σ ∈ C)` for each class `C` reached.
pub fn bruteforce_law(law: &ClassProductLaw, budget: u64) -> Result<BTreeMap<CycleType, ExactRat>> {
    let total = law.tuple_count();
    Ok(bruteforce_counts(law, budget)?
        .into_iter()
        .map(|(t, c)| (t, ExactRat::new(BigInt::from(c), total.clone())))
        .collect())
}
