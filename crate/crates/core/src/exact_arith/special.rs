use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;
/// Rational number, always kept in lowest terms with a positive denominator.
pub type ExactRat = BigRational;

pub fn to_rat(v: ExactInt) -> ExactRat {
    ExactRat::from_integer(v)
}

/// `(-1)^k` as a machine integer.
pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `2^e` for any integer exponent, as an exact rational.
pub fn pow2(e: i64) -> ExactRat {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        ExactRat::from_integer(p)
    } else {
        ExactRat::new(BigInt::one(), p)
    }
}

fn factorial_table() -> &'static Mutex<Vec<BigInt>> {
    static TABLE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// `k!`, memoized.
pub fn factorial(k: usize) -> ExactInt {
    let mut table = factorial_table().lock().expect("factorial table poisoned");
    while table.len() <= k {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[k].clone()
}

/// `k!! = k (k-2) (k-4) ...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(k: i64) -> Result<ExactInt> {
    if k < -1 {
        return domain(format!("double factorial of {k} is undefined"));
    }
    let mut acc = BigInt::one();
    let mut i = k;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(acc)
}

/// Binomial coefficient with a generalized (possibly negative) upper index.
///
/// `C(a, b) = 0` for `b < 0`, and `C(-l, k) = (-1)^k C(l + k - 1, k)`.
pub fn binomial(a: i64, b: i64) -> ExactInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a < 0 {
        let reflected = binomial(b - a - 1, b);
        return if b % 2 == 0 { reflected } else { -reflected };
    }
    if b > a {
        return BigInt::zero();
    }
    let k = b.min(a - b);
    let mut acc = BigInt::one();
    // acc stays integral: after step i it equals C(a - k + i, i)
    for i in 1..=k {
        acc *= a - k + i;
        acc /= i;
    }
    acc
}

fn stirling_table() -> &'static Mutex<Vec<Vec<BigInt>>> {
    static TABLE: OnceLock<Mutex<Vec<Vec<BigInt>>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![vec![BigInt::one()]]))
}

/// Unsigned Stirling number of the first kind: the number of permutations of
/// `l` elements with exactly `v` cycles.
pub fn stirling_cycle(l: usize, v: usize) -> ExactInt {
    if v > l {
        return BigInt::zero();
    }
    let mut table = stirling_table().lock().expect("stirling table poisoned");
    while table.len() <= l {
        let m = table.len() - 1;
        let prev = &table[m];
        // s(m+1, v) = s(m, v-1) + m s(m, v)
        let row: Vec<BigInt> = (0..=m + 1)
            .map(|v| {
                let mut x = BigInt::zero();
                if v >= 1 {
                    x += &prev[v - 1];
                }
                if v <= m {
                    x += &prev[v] * m;
                }
                x
            })
            .collect();
        table.push(row);
    }
    table[l][v].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Lexicographic successor; returns false after the last permutation.
    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    fn count_cycles(p: &[usize]) -> usize {
        let mut seen = vec![false; p.len()];
        let mut cycles = 0;
        for s in 0..p.len() {
            if !seen[s] {
                cycles += 1;
                let mut i = s;
                while !seen[i] {
                    seen[i] = true;
                    i = p[i];
                }
            }
        }
        cycles
    }

    fn stirling_by_enumeration(l: usize) -> Vec<u64> {
        let mut counts = vec![0u64; l + 1];
        let mut p: Vec<usize> = (0..l).collect();
        loop {
            counts[count_cycles(&p)] += 1;
            if !next_permutation(&mut p) {
                break;
            }
        }
        counts
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(6), int(720));
        assert_eq!(factorial(20), int(2_432_902_008_176_640_000));
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1).unwrap(), int(1));
        assert_eq!(double_factorial(0).unwrap(), int(1));
        assert_eq!(double_factorial(5).unwrap(), int(15));
        assert_eq!(double_factorial(9).unwrap(), int(945));
        assert!(double_factorial(-2).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(-3, 2), int(6));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(4, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(-1, 3), int(-1));
        // falling-product definition for negative upper index
        for a in -8i64..0 {
            for b in 0i64..8 {
                let mut num = BigInt::one();
                for i in 0..b {
                    num *= a - i;
                }
                assert_eq!(binomial(a, b), num / factorial(b as usize), "C({a},{b})");
            }
        }
    }

    #[test]
    fn stirling_small_values() {
        assert_eq!(stirling_cycle(3, 1), int(2));
        assert_eq!(stirling_cycle(4, 2), int(11));
        assert_eq!(stirling_cycle(5, 5), int(1));
        assert_eq!(stirling_cycle(0, 0), int(1));
        assert_eq!(stirling_cycle(4, 0), int(0));
        assert_eq!(stirling_cycle(2, 3), int(0));
    }

    #[test]
    fn stirling_matches_permutation_census() {
        for l in 0..=7 {
            let counts = stirling_by_enumeration(l);
            for (v, &c) in counts.iter().enumerate() {
                assert_eq!(stirling_cycle(l, v), BigInt::from(c), "s({l},{v})");
            }
        }
    }

    #[test]
    fn stirling_rows_sum_to_factorial() {
        for l in 0..=10 {
            let total: BigInt = (0..=l).map(|v| stirling_cycle(l, v)).sum();
            assert_eq!(total, factorial(l));
        }
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(pow2(3), ExactRat::from_integer(int(8)));
        assert_eq!(pow2(-2), ExactRat::new(int(1), int(4)));
        assert_eq!(pow2(0), ExactRat::one());
    }
}
