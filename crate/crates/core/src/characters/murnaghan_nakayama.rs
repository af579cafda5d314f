use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::exact_arith::ExactInt;
use crate::permutations::CycleType;

/// Every way to strip a rim hook of length `r` off `λ`, as
/// `(remaining shape, height)`.
///
/// Works on the beta-set `{λ_i + k - i}`: removing a rim hook of length `r`
/// slides one bead from `b` to the empty position `b - r`, and the hook's
/// height equals the number of beads jumped over.
pub fn rim_hook_removals(lambda: &Partition, r: usize) -> Vec<(Partition, usize)> {
    let k = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (k - 1 - i))
        .collect();
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts = moved.iter().enumerate().map(|(j, &c)| c - (k - 1 - j)).collect();
        out.push((Partition::from_trailing_zeros(parts), height));
    }
    out
}

/// Evaluates `χ^λ` on the class whose cycle lengths are `composition`,
/// memoized on (remaining shape, position in the composition).
struct MnEvaluator<'a> {
    composition: &'a [usize],
    memo: HashMap<(Partition, usize), ExactInt>,
}

impl MnEvaluator<'_> {
    fn eval(&mut self, shape: &Partition, at: usize) -> ExactInt {
        if at == self.composition.len() {
            return if shape.is_empty() {
                BigInt::from(1)
            } else {
                BigInt::zero()
            };
        }
        let key = (shape.clone(), at);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (rest, height) in rim_hook_removals(shape, self.composition[at]) {
            let v = self.eval(&rest, at + 1);
            if height % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ^λ(C)` where `C` has the given cycle lengths, removed in the order given.
pub fn mn_character_for_composition(lambda: &Partition, composition: &[usize]) -> Result<ExactInt> {
    let total: usize = composition.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: total,
        });
    }
    let mut ev = MnEvaluator {
        composition,
        memo: HashMap::new(),
    };
    Ok(ev.eval(lambda, 0))
}

/// `χ^λ(C_ν)` by the Murnaghan–Nakayama rule, largest cycles removed first.
pub fn mn_character(lambda: &Partition, t: &CycleType) -> Result<ExactInt> {
    mn_character_for_composition(lambda, &t.parts_desc())
}

/// One border strip removed during a Murnaghan–Nakayama expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHook {
    pub length: usize,
    /// Rows occupied minus one.
    pub height: usize,
}

/// A full sequence of rim-hook removals emptying a shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookTableau {
    pub hooks: Vec<RimHook>,
}

impl RimHookTableau {
    pub fn height(&self) -> usize {
        self.hooks.iter().map(|h| h.height).sum()
    }

    /// `(-1)^ht(T)`.
    pub fn sign(&self) -> i64 {
        if self.height().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Explicitly lists every rim hook tableau of shape `λ` and type
/// `composition`. Exponential; meant for small shapes and cross-checks.
pub fn rim_hook_tableaux(lambda: &Partition, composition: &[usize]) -> Result<Vec<RimHookTableau>> {
    let total: usize = composition.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: total,
        });
    }
    fn rec(shape: &Partition, rest: &[usize], path: &mut Vec<RimHook>, out: &mut Vec<RimHookTableau>) {
        let Some((&r, tail)) = rest.split_first() else {
            if shape.is_empty() {
                out.push(RimHookTableau { hooks: path.clone() });
            }
            return;
        };
        for (next, height) in rim_hook_removals(shape, r) {
            path.push(RimHook { length: r, height });
            rec(&next, tail, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, composition, &mut Vec::new(), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{dimension, partitions_of};
    use crate::permutations::{class_size, CycleType};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn ct(p: &[usize]) -> CycleType {
        CycleType::from_parts(p).unwrap()
    }

    #[test]
    fn removals_of_small_shapes() {
        // (3,1) has a single removable domino: the end of the first row
        assert_eq!(rim_hook_removals(&part(&[3, 1]), 2), vec![(part(&[1, 1]), 0)]);
        assert_eq!(rim_hook_removals(&part(&[2, 1, 1]), 2), vec![(part(&[2]), 1)]);
        let mut got = rim_hook_removals(&part(&[4, 2]), 2);
        got.sort();
        assert_eq!(got, vec![(part(&[2, 2]), 0), (part(&[4]), 0)]);
        assert!(rim_hook_removals(&part(&[3, 2, 1]), 2).is_empty());
        assert_eq!(rim_hook_removals(&part(&[2, 2]), 3), vec![(part(&[1]), 1)]);
        // a 2x2 block is never a border strip
        assert!(rim_hook_removals(&part(&[2, 2]), 4).is_empty());
    }

    #[test]
    fn s3_table() {
        // rows (3), (2,1), (1,1,1); columns 1^3, 2 1, 3
        let want = [[1, 1, 1], [2, 0, -1], [1, -1, 1]];
        let classes = [ct(&[1, 1, 1]), ct(&[2, 1]), ct(&[3])];
        for (lam, row) in [part(&[3]), part(&[2, 1]), part(&[1, 1, 1])].iter().zip(want) {
            for (c, w) in classes.iter().zip(row) {
                assert_eq!(mn_character(lam, c).unwrap(), BigInt::from(w), "{lam} on {c}");
            }
        }
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(
            mn_character(&part(&[2, 1]), &ct(&[2, 2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn identity_gives_dimension() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                assert_eq!(
                    mn_character(&lam, &CycleType::identity(n)).unwrap(),
                    dimension(&lam)
                );
            }
        }
    }

    #[test]
    fn non_hooks_vanish_on_full_cycle() {
        for n in 1..=8 {
            for lam in partitions_of(n) {
                let v = mn_character(&lam, &CycleType::full_cycle(n)).unwrap();
                if !lam.is_hook() {
                    assert!(v.is_zero(), "{lam}");
                } else {
                    assert_eq!(v.magnitude(), &num_bigint::BigUint::from(1u8));
                }
            }
        }
    }

    #[test]
    fn composition_order_is_irrelevant() {
        for n in 1..=8 {
            for t in CycleType::all(n) {
                let desc = t.parts_desc();
                let asc: Vec<usize> = desc.iter().rev().copied().collect();
                for lam in partitions_of(n) {
                    assert_eq!(
                        mn_character_for_composition(&lam, &desc).unwrap(),
                        mn_character_for_composition(&lam, &asc).unwrap(),
                        "{lam} on {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn memoized_sum_equals_explicit_tableaux() {
        for n in 1..=7 {
            for t in CycleType::all(n) {
                for lam in partitions_of(n) {
                    let tabs = rim_hook_tableaux(&lam, &t.parts_desc()).unwrap();
                    let direct: i64 = tabs.iter().map(RimHookTableau::sign).sum();
                    assert_eq!(mn_character(&lam, &t).unwrap(), BigInt::from(direct));
                }
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 1..=6 {
            let lams = partitions_of(n);
            let classes = CycleType::all(n);
            for a in &classes {
                for b in &classes {
                    let s: BigInt = lams
                        .iter()
                        .map(|l| mn_character(l, a).unwrap() * mn_character(l, b).unwrap())
                        .sum();
                    let want = if a == b {
                        crate::exact_arith::factorial(n) / class_size(a)
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(s, want, "{a} vs {b}");
                }
            }
            for l1 in &lams {
                for l2 in &lams {
                    let s: BigInt = classes
                        .iter()
                        .map(|c| class_size(c) * mn_character(l1, c).unwrap() * mn_character(l2, c).unwrap())
                        .sum();
                    let want = if l1 == l2 {
                        crate::exact_arith::factorial(n)
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(s, want);
                }
            }
        }
    }
}
