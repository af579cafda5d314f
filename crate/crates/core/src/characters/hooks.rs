//! Closed forms for characters of one-hook shapes `(a, 1^(N-a))`.
//!
//! Throughout, `arm` is the first-row length `a` and `leg = N + 1 - arm` is
//! the first-column height, so the hook has `arm + leg - 1 = N` cells.

use num_bigint::BigInt;

use super::partition::Partition;
use crate::error::{domain, Error, Result};
use crate::exact_arith::{binomial, double_factorial, sign, ExactInt, ExactPoly, ExactRat};
use crate::permutations::CycleType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookShape {
    n: usize,
    arm: usize,
}

impl HookShape {
    pub fn new(n: usize, arm: usize) -> Result<Self> {
        if arm == 0 || arm > n {
            return domain(format!("hook arm {arm} outside [1, {n}]"));
        }
        Ok(HookShape { n, arm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arm(&self) -> usize {
        self.arm
    }

    pub fn leg(&self) -> usize {
        self.n + 1 - self.arm
    }

    pub fn partition(&self) -> Partition {
        let mut parts = vec![self.arm];
        parts.extend(std::iter::repeat_n(1, self.leg() - 1));
        Partition::new(parts).expect("hooks are partitions")
    }

    /// All `N` hooks of size `n`, by increasing arm.
    pub fn all(n: usize) -> impl Iterator<Item = HookShape> {
        (1..=n).map(move |arm| HookShape { n, arm })
    }
}

/// `χ^λ(C_N) = (-1)^(leg - 1)` for a hook `λ`.
pub fn chi_hook_on_ncycle(h: HookShape) -> ExactInt {
    BigInt::from(sign(h.leg() as i64 - 1))
}

/// Character of a hook on the class of fixed-point-free involutions.
///
/// Every tableau ends with a domino at the corner and the remaining dominoes
/// are interleavings of row and column removals, which gives a single signed
/// binomial for each parity of the arm.
pub fn chi_hook_on_involution(h: HookShape) -> Result<ExactInt> {
    let n = h.n();
    if n % 2 == 1 {
        return domain(format!("N = {n} is odd; no fixed-point-free involutions"));
    }
    let half = (n as i64 - 2) / 2;
    let (arm, leg) = (h.arm() as i64, h.leg() as i64);
    Ok(if arm % 2 == 0 {
        sign((leg - 1) / 2) * binomial(half, (arm - 2) / 2)
    } else {
        sign(leg / 2) * binomial(half, (arm - 1) / 2)
    })
}

/// Character of a hook on an arbitrary class:
/// `(-1)^(leg + ν) [ξ^arm] ξ/(1-ξ) prod_r (1 - ξ^r)^(ν_r)`,
/// with all products truncated at degree `arm`.
pub fn chi_hook_general(h: HookShape, t: &CycleType) -> Result<ExactInt> {
    if h.n() != t.degree() {
        return Err(Error::SizeMismatch {
            left: h.n(),
            right: t.degree(),
        });
    }
    let d = h.arm();
    let mut p = ExactPoly::geometric(d).shift(1);
    for r in t.support() {
        if r > d {
            // (1 - ξ^r)^ν ≡ 1 below degree r
            continue;
        }
        p = p.checked_mul(&ExactPoly::one_minus_power(r, t.count(r), d)?)?;
    }
    let c = p.coeff(d)?;
    if !c.is_integer() {
        return Err(Error::Internal(format!("non-integral hook character {c}")));
    }
    let s = sign((h.leg() + t.total_cycles()) as i64);
    Ok(c.to_integer() * s)
}

fn check_even_degree(n_total: usize, arm: usize) -> Result<()> {
    if n_total == 0 || n_total % 2 == 1 {
        return domain(format!("N = {n_total} must be positive and even"));
    }
    if arm == 0 || arm > n_total {
        return domain(format!("arm {arm} outside [1, {n_total}]"));
    }
    Ok(())
}

/// `F(N, arm) = χ(C_2) χ(C_N) / f` for the hook with the given arm, where
/// `C_2` is the class of fixed-point-free involutions.
pub fn f_weight(n_total: usize, arm: usize) -> Result<ExactRat> {
    check_even_degree(n_total, arm)?;
    let leg = (n_total + 1 - arm) as i64;
    let half = (n_total as i64 - 2) / 2;
    let a = arm as i64;
    let num = if a % 2 == 0 {
        sign((leg - 1) / 2) * binomial(half, (a - 2) / 2)
    } else {
        sign((leg + 2) / 2) * binomial(half, (a - 1) / 2)
    };
    let den = binomial(n_total as i64 - 1, a - 1);
    Ok(ExactRat::new(num, den))
}

/// `Q(n, m) = (2m-1)!! (2(n-m)-1)!! / (2n-1)!!`, with `(-1)!! = 1`.
pub fn q_weight(n: usize, m: usize) -> Result<ExactRat> {
    if n == 0 || m > n {
        return domain(format!("Q({n}, {m}) needs 0 <= m <= n, n >= 1"));
    }
    let (n, m) = (n as i64, m as i64);
    Ok(ExactRat::new(
        double_factorial(2 * m - 1)? * double_factorial(2 * (n - m) - 1)?,
        double_factorial(2 * n - 1)?,
    ))
}

/// `(-1)^leg F(2n, arm)` rewritten as `(-1)^(n-m+1) Q(n, m)` with
/// `m = floor(arm / 2)`. Holds for every arm in `[1, 2n]`.
pub fn signed_f_weight_via_q(n: usize, arm: usize) -> Result<ExactRat> {
    check_even_degree(2 * n, arm)?;
    let m = arm / 2;
    let q = q_weight(n, m)?;
    Ok(if sign(n as i64 - m as i64 + 1) > 0 { q } else { -q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{dimension, mn_character, rim_hook_tableaux};
    use num_traits::One;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn hook(n: usize, arm: usize) -> HookShape {
        HookShape::new(n, arm).unwrap()
    }

    #[test]
    fn shape_bookkeeping() {
        let h = hook(6, 2);
        assert_eq!(h.leg(), 5);
        assert_eq!(h.partition().parts(), &[2, 1, 1, 1, 1]);
        assert!(HookShape::new(4, 0).is_err());
        assert!(HookShape::new(4, 5).is_err());
        assert_eq!(HookShape::all(5).count(), 5);
    }

    #[test]
    fn ncycle_values() {
        assert_eq!(chi_hook_on_ncycle(hook(4, 4)), int(1));
        assert_eq!(chi_hook_on_ncycle(hook(4, 1)), int(-1));
        // arm N-1 has leg 2
        for n in 2..=10 {
            assert_eq!(chi_hook_on_ncycle(hook(n, n - 1)), int(-1));
        }
    }

    #[test]
    fn involution_values() {
        assert_eq!(chi_hook_on_involution(hook(2, 2)).unwrap(), int(1));
        assert_eq!(chi_hook_on_involution(hook(2, 1)).unwrap(), int(-1));
        assert_eq!(chi_hook_on_involution(hook(4, 2)).unwrap(), int(-1));
        assert!(chi_hook_on_involution(hook(5, 2)).is_err());
    }

    #[test]
    fn closed_forms_agree_with_mn() {
        for n in 1..=10 {
            for h in HookShape::all(n) {
                let lam = h.partition();
                assert_eq!(
                    chi_hook_on_ncycle(h),
                    mn_character(&lam, &CycleType::full_cycle(n)).unwrap()
                );
                if n % 2 == 0 {
                    assert_eq!(
                        chi_hook_on_involution(h).unwrap(),
                        mn_character(&lam, &CycleType::involution(n).unwrap()).unwrap()
                    );
                }
                for t in CycleType::all(n) {
                    assert_eq!(
                        chi_hook_general(h, &t).unwrap(),
                        mn_character(&lam, &t).unwrap(),
                        "{lam} on {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn short_arm_has_a_single_tableau() {
        // arm <= shortest cycle: χ = (-1)^(leg + ν) and exactly one tableau
        for n in 1..=8 {
            for t in CycleType::all(n) {
                for arm in 1..=t.min_part().min(n) {
                    let h = hook(n, arm);
                    let want = int(sign((h.leg() + t.total_cycles()) as i64));
                    assert_eq!(chi_hook_general(h, &t).unwrap(), want);
                    let tabs = rim_hook_tableaux(&h.partition(), &t.parts_desc()).unwrap();
                    assert_eq!(tabs.len(), 1, "{t} arm {arm}");
                }
            }
        }
    }

    #[test]
    fn general_size_mismatch() {
        assert!(chi_hook_general(hook(4, 2), &CycleType::identity(5)).is_err());
    }

    #[test]
    fn f_weight_is_character_ratio() {
        for n in (2..=12).step_by(2) {
            for h in HookShape::all(n) {
                let lam = h.partition();
                let num = mn_character(&lam, &CycleType::involution(n).unwrap()).unwrap()
                    * mn_character(&lam, &CycleType::full_cycle(n)).unwrap();
                let want = ExactRat::new(num, dimension(&lam));
                assert_eq!(f_weight(n, h.arm()).unwrap(), want, "N={n} arm={}", h.arm());
            }
        }
    }

    #[test]
    fn signed_weight_matches_q_form_on_every_arm() {
        for n in 1..=10usize {
            for arm in 1..=2 * n {
                let leg = 2 * n + 1 - arm;
                let f = f_weight(2 * n, arm).unwrap();
                let lhs = if leg % 2 == 0 { f } else { -f };
                assert_eq!(lhs, signed_f_weight_via_q(n, arm).unwrap(), "n={n} arm={arm}");
            }
        }
    }

    #[test]
    fn weight_examples() {
        // N = 2: arm 2 gives -Q(1,1) = -1, arm 1 gives +Q(1,0) = 1
        assert_eq!(signed_f_weight_via_q(1, 2).unwrap(), -ExactRat::one());
        assert_eq!(signed_f_weight_via_q(1, 1).unwrap(), ExactRat::one());
        assert_eq!(-f_weight(2, 2).unwrap(), -ExactRat::one());
        assert_eq!(q_weight(2, 1).unwrap(), ExactRat::new(int(1), int(3)));
        assert!(f_weight(3, 1).is_err());
        assert!(f_weight(4, 5).is_err());
        assert!(q_weight(2, 3).is_err());
    }
}
