use std::fmt;

use num_bigint::BigInt;

use crate::characters::{partitions_of, Partition};
use crate::error::{domain, Result};
use crate::exact_arith::{factorial, ExactInt};

/// Cycle census `(ν_1, .., ν_N)` of a permutation of `[N]`; identifies a
/// conjugacy class of `S_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    // counts[j - 1] = number of j-cycles; length is N
    counts: Vec<usize>,
}

impl CycleType {
    /// From the count vector, `counts[j - 1] = ν_j`. The length of the
    /// vector is `N` and must equal `sum j ν_j`.
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        let n = counts.len();
        if n == 0 {
            return domain("cycle type of an empty permutation");
        }
        let total: usize = counts.iter().enumerate().map(|(j, c)| (j + 1) * c).sum();
        if total != n {
            return domain(format!("sum j*nu_j = {total} but N = {n}"));
        }
        Ok(CycleType { counts })
    }

    /// From cycle lengths in any order.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        if parts.contains(&0) {
            return domain("cycle of length zero");
        }
        let n = parts.iter().sum();
        if n == 0 {
            return domain("cycle type of an empty permutation");
        }
        Ok(Self::from_lengths_unchecked(n, parts.iter().copied()))
    }

    pub(crate) fn from_lengths_unchecked(n: usize, lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = vec![0; n];
        for l in lengths {
            counts[l - 1] += 1;
        }
        CycleType { counts }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_lengths_unchecked(n, std::iter::repeat_n(1, n))
    }

    /// The class of `N`-cycles.
    pub fn full_cycle(n: usize) -> Self {
        Self::from_lengths_unchecked(n, [n])
    }

    /// The class of fixed-point-free involutions; `n` must be even.
    pub fn involution(n: usize) -> Result<Self> {
        if n == 0 || n % 2 == 1 {
            return domain(format!("no fixed-point-free involutions of [{n}]"));
        }
        Ok(Self::from_lengths_unchecked(n, std::iter::repeat_n(2, n / 2)))
    }

    pub fn from_partition(p: &Partition) -> Result<Self> {
        Self::from_parts(p.parts())
    }

    /// Every cycle type of `S_n`, in the order of [`partitions_of`].
    pub fn all(n: usize) -> Vec<CycleType> {
        partitions_of(n)
            .iter()
            .filter_map(|p| Self::from_partition(p).ok())
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.counts.len()
    }

    /// `ν_j`.
    pub fn count(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.counts.get(j - 1).copied().unwrap_or(0)
        }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Total number of cycles `ν = sum_j ν_j`.
    pub fn total_cycles(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Cycle lengths that occur, increasing.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(j, _)| j + 1)
    }

    /// Shortest cycle length.
    pub fn min_part(&self) -> usize {
        self.support().next().expect("nonempty cycle type")
    }

    /// Cycle lengths as a non-increasing composition.
    pub fn parts_desc(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.total_cycles());
        for j in (1..=self.degree()).rev() {
            parts.extend(std::iter::repeat_n(j, self.count(j)));
        }
        parts
    }

    pub fn to_partition(&self) -> Partition {
        Partition::new(self.parts_desc()).expect("cycle lengths form a partition")
    }
}

impl fmt::Display for CycleType {
    /// Exponential notation, e.g. `2^2 1` for two transpositions and a fixed point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for j in (1..=self.degree()).rev() {
            let c = self.count(j);
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{j}")?;
            } else {
                write!(f, "{j}^{c}")?;
            }
        }
        Ok(())
    }
}

/// Size of a conjugacy class by Cauchy's formula `N! / prod_r r^{ν_r} ν_r!`.
pub fn class_size(t: &CycleType) -> ExactInt {
    let mut denom = BigInt::from(1);
    for r in t.support() {
        let c = t.count(r);
        denom *= BigInt::from(r).pow(c as u32) * factorial(c);
    }
    factorial(t.degree()) / denom
}
