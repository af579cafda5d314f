use num_traits::ToPrimitive;

use super::{class_size, CycleType, Permutation};
use crate::error::{domain, Error, Result};

/// Largest `N` for which [`enumerate_matchings`] accepts a request by default.
pub const DEFAULT_MATCHING_LIMIT: usize = 16;

const UNMATCHED: usize = usize::MAX;

/// Streaming enumeration of the fixed-point-free involutions of `[N]`.
///
/// Order is pinned: the smallest unmatched point is paired with each larger
/// unmatched point in increasing order, recursively. Memory is `O(N)`.
#[derive(Clone, Debug)]
pub struct Matchings {
    mate: Vec<usize>,
    // pairs in the order they were made; the first `pinned` are never advanced
    stack: Vec<(usize, usize)>,
    pinned: usize,
    started: bool,
    done: bool,
}

impl Matchings {
    fn new(n: usize) -> Self {
        Matchings {
            mate: vec![UNMATCHED; n],
            stack: Vec::with_capacity(n / 2),
            pinned: 0,
            started: false,
            done: false,
        }
    }

    /// The shard of matchings in which point `0` is paired with `partner`
    /// (zero-based). The `N - 1` shards partition the full enumeration.
    pub fn with_first_partner(n: usize, partner: usize) -> Result<Self> {
        if n < 2 || n % 2 == 1 || partner == 0 || partner >= n {
            return domain(format!("no matching of [{n}] pairs 0 with {partner}"));
        }
        let mut m = Self::new(n);
        m.link(0, partner);
        m.pinned = 1;
        Ok(m)
    }

    fn link(&mut self, a: usize, b: usize) {
        self.mate[a] = b;
        self.mate[b] = a;
        self.stack.push((a, b));
    }

    fn next_free(&self, from: usize) -> Option<usize> {
        (from..self.mate.len()).find(|&c| self.mate[c] == UNMATCHED)
    }

    fn fill(&mut self) {
        while let Some(a) = self.next_free(0) {
            let b = self.next_free(a + 1).expect("even number of free points");
            self.link(a, b);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some((a, b)) = self.stack.pop() {
            if self.stack.len() < self.pinned {
                return false;
            }
            self.mate[a] = UNMATCHED;
            self.mate[b] = UNMATCHED;
            if let Some(c) = self.next_free(b + 1) {
                self.link(a, c);
                self.fill();
                return true;
            }
        }
        false
    }

    /// The current matching's partner array, zero-based. Valid after `next`.
    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    /// Advances without allocating; returns the new partner array.
    pub fn next_mates(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(&self.mate)
    }
}

impl Iterator for Matchings {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.next_mates().map(|m| Permutation::new_unchecked(m.to_vec()))
    }
}

/// All `(N-1)!!` fixed-point-free involutions of `[N]`.
pub fn enumerate_matchings(n: usize, limit: usize) -> Result<Matchings> {
    if n % 2 == 1 {
        return domain(format!("N = {n} is odd; no perfect matchings"));
    }
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "matching size N",
            value: n as u128,
            limit: limit as u128,
        });
    }
    Ok(Matchings::new(n))
}

/// Every element of a conjugacy class, each exactly once.
///
/// Each cycle is written starting at its smallest point and cycles are
/// opened in increasing order of their smallest point, which makes the
/// generation bijective. Refuses classes larger than `budget`.
pub fn class_elements(t: &CycleType, budget: u64) -> Result<Vec<Permutation>> {
    let size = class_size(t);
    let size_u = size.to_u64().unwrap_or(u64::MAX);
    if size_u > budget {
        return Err(Error::LimitExceeded {
            what: "class size",
            value: size_u as u128,
            limit: budget as u128,
        });
    }
    let n = t.degree();
    let mut gen = ClassGen {
        remaining: (0..=n).map(|j| t.count(j)).collect(),
        used: vec![false; n],
        images: vec![0; n],
        cycle: Vec::with_capacity(n),
        out: Vec::with_capacity(size_u as usize),
    };
    gen.open_cycle();
    debug_assert_eq!(gen.out.len() as u64, size_u);
    Ok(gen.out)
}

struct ClassGen {
    remaining: Vec<usize>,
    used: Vec<bool>,
    images: Vec<usize>,
    cycle: Vec<usize>,
    out: Vec<Permutation>,
}

impl ClassGen {
    fn open_cycle(&mut self) {
        let Some(start) = self.used.iter().position(|&u| !u) else {
            self.out.push(Permutation::new_unchecked(self.images.clone()));
            return;
        };
        let base = self.cycle.len();
        self.used[start] = true;
        self.cycle.push(start);
        for len in 1..self.remaining.len() {
            if self.remaining[len] > 0 {
                self.remaining[len] -= 1;
                self.extend_cycle(base, len - 1);
                self.remaining[len] += 1;
            }
        }
        self.cycle.pop();
        self.used[start] = false;
    }

    // cycle[base..] is the cycle under construction
    fn extend_cycle(&mut self, base: usize, left: usize) {
        if left == 0 {
            let cyc = &self.cycle[base..];
            for k in 0..cyc.len() {
                self.images[cyc[k]] = cyc[(k + 1) % cyc.len()];
            }
            self.open_cycle();
            return;
        }
        let start = self.cycle[base];
        for next in start + 1..self.used.len() {
            if !self.used[next] {
                self.used[next] = true;
                self.cycle.push(next);
                self.extend_cycle(base, left - 1);
                self.cycle.pop();
                self.used[next] = false;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::double_factorial;
    use num_bigint::BigInt;
    use std::collections::HashSet;

    #[test]
    fn counts_match_double_factorial() {
        for n in (0..=12).step_by(2) {
            let all: Vec<Permutation> = enumerate_matchings(n, 16).unwrap().collect();
            assert_eq!(
                BigInt::from(all.len()),
                double_factorial(n as i64 - 1).unwrap(),
                "N = {n}"
            );
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|p| p.degree() == n));
            if n > 0 {
                assert!(all.iter().all(Permutation::is_fixed_point_free_involution));
            }
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate_matchings(2, 16).unwrap().count(), 1);
        assert_eq!(enumerate_matchings(4, 16).unwrap().count(), 3);
        assert_eq!(enumerate_matchings(6, 16).unwrap().count(), 15);
    }

    #[test]
    fn pinned_order() {
        let words: Vec<Vec<usize>> = enumerate_matchings(4, 16).unwrap().map(|p| p.word()).collect();
        // (12)(34), (13)(24), (14)(23)
        assert_eq!(words, vec![vec![2, 1, 4, 3], vec![3, 4, 1, 2], vec![4, 3, 2, 1]]);
    }

    #[test]
    fn invalid_requests() {
        assert!(matches!(enumerate_matchings(5, 16), Err(Error::Domain(_))));
        assert!(matches!(
            enumerate_matchings(18, 16),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(Matchings::with_first_partner(6, 0).is_err());
        assert!(Matchings::with_first_partner(6, 6).is_err());
    }

    #[test]
    fn shards_partition_the_enumeration() {
        let n = 10;
        let full: Vec<Permutation> = enumerate_matchings(n, 16).unwrap().collect();
        let sharded: Vec<Permutation> = (1..n)
            .flat_map(|p| Matchings::with_first_partner(n, p).unwrap())
            .collect();
        assert_eq!(full, sharded);
    }

    #[test]
    fn class_elements_are_exact() {
        for n in 1..=7 {
            for t in CycleType::all(n) {
                let elems = class_elements(&t, 1 << 20).unwrap();
                assert_eq!(BigInt::from(elems.len()), class_size(&t), "{t}");
                let distinct: HashSet<_> = elems.iter().collect();
                assert_eq!(distinct.len(), elems.len());
                assert!(elems.iter().all(|p| p.cycle_type() == t));
            }
        }
    }

    #[test]
    fn class_budget_enforced() {
        let t = CycleType::full_cycle(8);
        assert!(matches!(
            class_elements(&t, 100),
            Err(Error::LimitExceeded { .. })
        ));
    }
}
