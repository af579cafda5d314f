use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::special::{binomial, ExactRat};
use crate::error::{domain, Error, Result};

/// Dense polynomial (or truncated power series) in one formal variable with
/// exact rational coefficients.
///
/// Every value carries an explicit truncation degree `d` and stores exactly
/// `d + 1` coefficients; arithmetic between operands of different truncation
/// is rejected instead of coerced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactPoly {
    coeffs: Vec<ExactRat>,
}

impl ExactPoly {
    pub fn zero(degree: usize) -> Self {
        ExactPoly {
            coeffs: vec![ExactRat::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::monomial(0, ExactRat::one(), degree)
    }

    /// `c * t^k`, or zero if `k` lies beyond the truncation.
    pub fn monomial(k: usize, c: ExactRat, degree: usize) -> Self {
        let mut p = Self::zero(degree);
        if k <= degree {
            p.coeffs[k] = c;
        }
        p
    }

    /// Builds a polynomial from its low-order coefficients. Nonzero
    /// coefficients past `degree` are an error.
    pub fn from_coeffs(coeffs: Vec<ExactRat>, degree: usize) -> Result<Self> {
        if coeffs.iter().skip(degree + 1).any(|c| !c.is_zero()) {
            return domain(format!(
                "coefficients past degree {degree} would be silently dropped"
            ));
        }
        let mut coeffs = coeffs;
        coeffs.resize(degree + 1, ExactRat::zero());
        Ok(ExactPoly { coeffs })
    }

    pub fn from_ints(coeffs: &[i64], degree: usize) -> Result<Self> {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| ExactRat::from_integer(BigInt::from(c)))
                .collect(),
            degree,
        )
    }

    /// `1 + t + ... + t^(len-1)`.
    pub fn geometric_prefix(len: usize, degree: usize) -> Self {
        let mut p = Self::zero(degree);
        for c in p.coeffs.iter_mut().take(len) {
            *c = ExactRat::one();
        }
        p
    }

    /// `1 / (1 - t)` truncated.
    pub fn geometric(degree: usize) -> Self {
        Self::geometric_prefix(degree + 1, degree)
    }

    /// `(1 - t^r)^e` by direct binomial expansion.
    pub fn one_minus_power(r: usize, e: usize, degree: usize) -> Result<Self> {
        if r == 0 {
            return domain("(1 - t^0)^e is degenerate");
        }
        let mut p = Self::zero(degree);
        for h in 0..=e {
            let k = h * r;
            if k > degree {
                break;
            }
            let c = binomial(e as i64, h as i64);
            p.coeffs[k] = ExactRat::from_integer(if h % 2 == 0 { c } else { -c });
        }
        Ok(p)
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    /// `[t^k]` of the polynomial.
    pub fn coeff(&self, k: usize) -> Result<&ExactRat> {
        self.coeffs.get(k).ok_or_else(|| {
            Error::Domain(format!(
                "coefficient t^{k} lies beyond truncation degree {}",
                self.truncation()
            ))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(ExactPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(ExactPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Truncated product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let d = self.truncation();
        let mut out = vec![ExactRat::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(ExactPoly { coeffs: out })
    }

    pub fn checked_pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.truncation());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `t^k`, dropping whatever falls past the truncation.
    pub fn shift(&self, k: usize) -> Self {
        let d = self.truncation();
        let mut out = Self::zero(d);
        for i in k..=d {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Evaluates at a rational point. Exact for polynomials; for genuine
    /// series it evaluates the truncation.
    pub fn eval(&self, t: &ExactRat) -> ExactRat {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRat::zero(), |acc, c| acc * t + c)
    }
}
