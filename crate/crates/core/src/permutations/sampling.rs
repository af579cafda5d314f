//! Exactly uniform samplers. The caller owns the RNG; nothing here touches
//! global randomness, so any run is reproducible from its seed.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{CycleType, Permutation};
use crate::error::{domain, Result};

/// Uniform fixed-point-free involution of `[n]`.
///
/// Sequential pairing: repeatedly take the largest unmatched point and pair
/// it with a uniformly chosen other unmatched point. Each of the `(n-1)!!`
/// matchings arises from exactly one choice sequence.
pub fn sample_matching<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Permutation> {
    if n == 0 || n % 2 == 1 {
        return domain(format!("no fixed-point-free involution of [{n}]"));
    }
    let mut pool: Vec<usize> = (0..n).collect();
    let mut images = vec![0; n];
    while let Some(a) = pool.pop() {
        let j = rng.random_range(0..pool.len());
        let b = pool.swap_remove(j);
        images[a] = b;
        images[b] = a;
    }
    Ok(Permutation::new_unchecked(images))
}

/// Uniform `n`-cycle: `0` followed by a uniformly shuffled arrangement of the
/// remaining points, read as one cycle. Covers all `(n-1)!` cycles once each.
pub fn sample_unicyclic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Permutation> {
    if n == 0 {
        return domain("no permutations of an empty set");
    }
    let mut order: Vec<usize> = (0..n).collect();
    order[1..].shuffle(rng);
    let mut images = vec![0; n];
    for k in 0..n {
        images[order[k]] = order[(k + 1) % n];
    }
    Ok(Permutation::new_unchecked(images))
}

/// Uniform element of the conjugacy class `t`: a uniformly random
/// arrangement of `[n]` cut into consecutive cycles of the prescribed
/// lengths. Every class element is hit by the same number of arrangements.
pub fn sample_class<R: Rng + ?Sized>(t: &CycleType, rng: &mut R) -> Permutation {
    let n = t.degree();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut images = vec![0; n];
    let mut at = 0;
    for len in t.parts_desc() {
        let cyc = &order[at..at + len];
        for k in 0..len {
            images[cyc[k]] = cyc[(k + 1) % len];
        }
        at += len;
    }
    Permutation::new_unchecked(images)
}
