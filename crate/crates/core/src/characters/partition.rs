use std::fmt;

use num_bigint::BigInt;

use crate::error::{domain, Result};
use crate::exact_arith::{factorial, ExactInt};

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return domain(format!("partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("partition {parts:?} is not non-increasing"));
        }
        Ok(Partition { parts })
    }

    /// Drops zero parts; the rest must already be non-increasing.
    pub(crate) fn from_trailing_zeros(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// One row plus one column, i.e. `(a, 1, .., 1)`.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in conj.parts.iter().enumerate().take(row) {
                hooks.push((row - j - 1) + (col - i - 1) + 1);
            }
        }
        hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first,
/// `(1^n)` last. `n = 0` yields the single empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=rest.min(cap)).rev() {
            prefix.push(first);
            rec(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of shape `λ`, by the hook-length formula.
pub fn dimension(lambda: &Partition) -> ExactInt {
    let hooks: BigInt = lambda.hook_lengths().iter().map(|&h| BigInt::from(h)).product();
    factorial(lambda.size()) / hooks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::binomial;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    /// p(n) by Euler's pentagonal recurrence.
    fn partition_count(n: usize) -> i64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n]
    }

    /// Counts standard Young tableaux by removing corners recursively.
    fn syt_count(parts: &[usize]) -> u64 {
        if parts.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
            if is_corner {
                let mut smaller = parts.to_vec();
                smaller[i] -= 1;
                if smaller[i] == 0 {
                    smaller.pop();
                }
                total += syt_count(&smaller);
            }
        }
        total
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![3, 1, 1]).is_ok());
        assert!(Partition::new(vec![1, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn counts() {
        assert_eq!(partitions_of(0).len(), 1);
        assert!(partitions_of(0)[0].is_empty());
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(8).len(), 22);
        for n in 0..=15 {
            assert_eq!(partitions_of(n).len() as i64, partition_count(n), "p({n})");
        }
    }

    #[test]
    fn reverse_lexicographic_order() {
        let ps: Vec<Vec<usize>> = partitions_of(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            ps,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        for n in 1..=10 {
            let ps = partitions_of(n);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
            assert!(ps.iter().all(|p| p.size() == n));
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[2, 2]).conjugate(), part(&[2, 2]));
        for p in partitions_of(9) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&part(&[2, 1, 1])), BigInt::from(3));
        assert_eq!(dimension(&part(&[6])), BigInt::from(1));
        assert_eq!(dimension(&part(&[2, 2])), BigInt::from(2));
        for n in 1..=9 {
            for p in partitions_of(n) {
                assert_eq!(dimension(&p), BigInt::from(syt_count(p.parts())), "{p}");
            }
        }
    }

    #[test]
    fn hook_dimension_is_binomial() {
        for n in 1..=12usize {
            for arm in 1..=n {
                let mut parts = vec![arm];
                parts.extend(std::iter::repeat_n(1, n - arm));
                assert_eq!(dimension(&part(&parts)), binomial(n as i64 - 1, arm as i64 - 1));
            }
        }
    }

    #[test]
    fn sum_of_squared_dimensions() {
        for n in 0..=10 {
            let total: BigInt = partitions_of(n).iter().map(|p| dimension(p).pow(2)).sum();
            assert_eq!(total, factorial(n));
        }
    }
}
