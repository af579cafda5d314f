//! Auxiliary identities the explicit distribution formula rests on: two
//! alternating binomial sums and the Stirling-number expansion of powers of
//! `log(1 / (1 - t))`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::ExactPoly;
use super::series::BivariateSeries;
use super::special::{binomial, factorial, stirling_cycle, ExactInt, ExactRat};
use crate::error::{Error, Result};

/// Both sides of `sum_j (-1)^j C(a,j) C(2j,b) = (-1)^a C(a,b-a) 2^(2a-b)`.
pub fn alternating_even_sum(a: i64, b: i64) -> (ExactInt, ExactInt) {
    let lhs = (0..=a)
        .map(|j| {
            let t = binomial(a, j) * binomial(2 * j, b);
            if j % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum();
    let rhs = signed(a, binomial(a, b - a) * pow2_int(2 * a - b));
    (lhs, rhs)
}

/// Both sides of
/// `sum_j (-1)^j C(a,j) C(2j+1,b) = (-1)^a [C(a,b-a) 2^(2a-b) + C(a,b-a-1) 2^(2a+1-b)]`.
pub fn alternating_odd_sum(a: i64, b: i64) -> (ExactInt, ExactInt) {
    let lhs = (0..=a)
        .map(|j| {
            let t = binomial(a, j) * binomial(2 * j + 1, b);
            if j % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum();
    let rhs = signed(
        a,
        binomial(a, b - a) * pow2_int(2 * a - b) + binomial(a, b - a - 1) * pow2_int(2 * a + 1 - b),
    );
    (lhs, rhs)
}

fn signed(k: i64, v: ExactInt) -> ExactInt {
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

// Only ever multiplied by a binomial that vanishes when the exponent is
// negative, so the negative branch may return anything finite.
fn pow2_int(e: i64) -> ExactInt {
    if e < 0 {
        BigInt::zero()
    } else {
        BigInt::from(1) << e
    }
}

/// Checks `(1/v!) (log 1/(1-t))^v = sum_l s(l,v)/l! t^l` through `t^order`
/// for every `v <= order`, computing the left side by truncated series powers.
pub fn check_stirling_log_series(order: usize) -> Result<()> {
    let log = ExactPoly::from_coeffs(
        (0..=order)
            .map(|k| {
                if k == 0 {
                    ExactRat::zero()
                } else {
                    ExactRat::new(BigInt::from(1), BigInt::from(k))
                }
            })
            .collect(),
        order,
    )?;
    let mut power = ExactPoly::one(order);
    for v in 0..=order {
        let lhs = power.scale(&ExactRat::new(BigInt::from(1), factorial(v)));
        for l in 0..=order {
            let rhs = ExactRat::new(stirling_cycle(l, v), factorial(l));
            if lhs.coeff(l)? != &rhs {
                return Err(Error::Internal(format!(
                    "log-power series mismatch at v={v}, t^{l}"
                )));
            }
        }
        power = power.checked_mul(&log)?;
    }
    Ok(())
}

/// Checks the rows of a generating-function series against the closed form
/// `[x^i y^v] ((1+x)/(1-x))^y = (1/v!) [x^i] log((1+x)/(1-x))^v`, evaluated
/// through Stirling numbers: `sum_l s(l,v)/l! [x^i] (2x/(1+x))^l`.
pub fn check_series_against_stirling(series: &BivariateSeries) -> Result<()> {
    for i in 0..=series.order() {
        for v in 0..=i {
            let mut rhs = ExactRat::zero();
            for l in v..=i {
                // [x^i] (2x)^l (1+x)^-l = 2^l C(-l, i-l)
                let c = binomial(-(l as i64), (i - l) as i64) * (BigInt::from(1) << l);
                rhs += ExactRat::new(stirling_cycle(l, v) * c, factorial(l));
            }
            if series.coeff(i, v)? != rhs {
                return Err(Error::Internal(format!("series mismatch at x^{i} y^{v}")));
            }
        }
    }
    Ok(())
}
