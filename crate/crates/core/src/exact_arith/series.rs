use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::ExactPoly;
use super::special::{factorial, ExactRat};
use crate::error::{domain, Error, Result};

/// Truncated bivariate series `sum c[i][j] x^i y^j`, stored as a triangle:
/// row `i` holds the coefficients of `y^0 ..= y^i`, so `c[i][j] = 0` for
/// `j > i` by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    rows: Vec<Vec<ExactRat>>,
}

impl BivariateSeries {
    /// Highest power of `x` retained.
    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// `[x^i y^j]`.
    pub fn coeff(&self, i: usize, j: usize) -> Result<ExactRat> {
        let row = self
            .rows
            .get(i)
            .ok_or_else(|| Error::Domain(format!("x^{i} lies beyond series order {}", self.order())))?;
        Ok(row.get(j).cloned().unwrap_or_else(ExactRat::zero))
    }

    /// `[x^i]` as a polynomial in `y`, coefficients of `y^0 ..= y^i`.
    pub fn x_coeff(&self, i: usize) -> Result<&[ExactRat]> {
        self.rows
            .get(i)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Domain(format!("x^{i} lies beyond series order {}", self.order())))
    }

    /// Evaluates the `y`-polynomials at a rational `y`, leaving a series in `x`.
    pub fn at_y(&self, y: &ExactRat) -> ExactPoly {
        let coeffs = self
            .rows
            .iter()
            .map(|row| row.iter().rev().fold(ExactRat::zero(), |acc, c| acc * y + c))
            .collect();
        ExactPoly::from_coeffs(coeffs, self.order()).expect("row count matches order")
    }
}

/// `log((1 + x) / (1 - x)) = 2 (x + x^3/3 + x^5/5 + ...)`, truncated.
pub fn log_ratio_series(degree: usize) -> ExactPoly {
    let coeffs = (0..=degree)
        .map(|k| {
            if k % 2 == 1 {
                ExactRat::new(BigInt::from(2), BigInt::from(k))
            } else {
                ExactRat::zero()
            }
        })
        .collect();
    ExactPoly::from_coeffs(coeffs, degree).expect("exact length")
}

/// Expansion of `((1 + x) / (1 - x))^y` through `x^(order_n + 1)`.
///
/// Computed as `exp(y L(x)) = sum_v y^v L(x)^v / v!` with `L` the odd log
/// series above. Because `L` has valuation one, `L^v` only reaches rows
/// `i >= v`, which is what makes the triangular layout exact.
pub fn hz_series(order_n: usize) -> Result<BivariateSeries> {
    if order_n < 1 {
        return domain("hz_series needs order_n >= 1");
    }
    let top = order_n + 1;
    let log = log_ratio_series(top);
    let mut rows: Vec<Vec<ExactRat>> = (0..=top).map(|i| vec![ExactRat::zero(); i + 1]).collect();
    let mut power = ExactPoly::one(top);
    for v in 0..=top {
        let inv_fact = ExactRat::new(BigInt::from(1), factorial(v));
        for (i, row) in rows.iter_mut().enumerate().skip(v) {
            let c = power.coeff(i)?;
            if !c.is_zero() {
                row[v] = c * &inv_fact;
            }
        }
        power = power.checked_mul(&log)?;
    }
    Ok(BivariateSeries { rows })
}
