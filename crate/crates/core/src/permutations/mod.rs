//! Permutations of `[N]`, cycle types, conjugacy-class sizes, and the
//! enumerators and samplers for matchings, unicyclic permutations and
//! general conjugacy classes.
//!
//! Composition convention: `a.compose(&b)` is `a ∘ b`, i.e. `b` acts first,
//! so `(a ∘ b)(i) = a(b(i))`. The product `γ = αβ` of the gluing model is
//! therefore `alpha.compose(&beta)`.

mod cycle_type;
mod matchings;
mod sampling;

use std::fmt;

pub use cycle_type::{class_size, CycleType};
pub use matchings::{class_elements, enumerate_matchings, Matchings, DEFAULT_MATCHING_LIMIT};
pub use sampling::{sample_class, sample_matching, sample_unicyclic};

use crate::error::{domain, Error, Result};

/// A bijection of `{0, .., N-1}` stored as its image word.
///
/// The public word interface ([`Permutation::from_word`], [`Permutation::word`])
/// is one-based to match the usual cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From zero-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return domain(format!("{images:?} is not a permutation of 0..{n}"));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn new_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    /// From a one-based word `(p(1), .., p(N))`.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        if word.contains(&0) {
            return domain("one-based word contains 0");
        }
        Self::new(word.iter().map(|&w| w - 1).collect())
    }

    /// From disjoint one-based cycles; unmentioned points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || touched[a - 1] {
                    return domain(format!("bad cycle {cycle:?} on [{n}]"));
                }
                touched[a - 1] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The canonical unicyclic permutation `1 -> 2 -> .. -> N -> 1`.
    pub fn full_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n.max(1)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a zero-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// One-based image word.
    pub fn word(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_lengths_unchecked(self.degree(), self.cycle_lengths())
    }

    pub fn cycle_count(&self) -> usize {
        cycle_count_of(&self.images, &mut vec![false; self.degree()])
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| j != i && self.images[j] == i)
    }
}

/// Cycle count of a zero-based image slice, reusing `seen` as scratch.
pub(crate) fn cycle_count_of(images: &[usize], seen: &mut [bool]) -> usize {
    seen.iter_mut().for_each(|s| *s = false);
    let mut cycles = 0;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i];
        }
    }
    cycles
}

impl fmt::Display for Permutation {
    /// Cycle notation, one-based, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
