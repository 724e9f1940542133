//! Integer polynomials, rational generating functions and their power-series
//! expansion by exact long division.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial; index is the power of `x`. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::from_i64(&[1])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn pow(&self, e: u32) -> IntPolynomial {
        (0..e).fold(IntPolynomial::one(), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for IntPolynomial {
    /// `1 - x - x^2` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ if !unit => write!(f, "{mag}")?,
                _ => {}
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `numerator / denominator` with a nonzero constant term in the denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalGF {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::InvalidInput(format!(
                "denominator `{denominator}` has zero constant term"
            )));
        }
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    pub fn mul(&self, other: &RationalGF) -> RationalGF {
        RationalGF {
            numerator: self.numerator.mul(&other.numerator),
            denominator: self.denominator.mul(&other.denominator),
        }
    }

    /// `c_0..=c_m`. Uses the recurrence `d_0 c_i = a_i - sum_{j>=1} d_j c_{i-j}`.
    pub fn series_coefficients(&self, m: usize) -> Result<Vec<BigInt>> {
        let d0 = self.denominator.coeff(0);
        let den = self.denominator.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let mut acc = self.numerator.coeff(i);
            for (j, d) in den.iter().enumerate().skip(1).take(i) {
                acc -= d * &out[i - j];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "coefficient of x^{i} in ({self}) is not an integer"
                )));
            }
            out.push(q);
        }
        Ok(out)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

/// Free-function form of [`RationalGF::series_coefficients`].
pub fn series_coefficients(gf: &RationalGF, m: usize) -> Result<Vec<BigInt>> {
    gf.series_coefficients(m)
}

/// Generating function of `{231,321}`-avoiders with exactly `k` fixed points:
/// `x^k (1-x)^(k+1) / (1-x-x^2)^(k+1)`.
pub fn gf_for_k(k: usize) -> RationalGF {
    let e = k as u32 + 1;
    let numerator = IntPolynomial::monomial(k).mul(&IntPolynomial::from_i64(&[1, -1]).pow(e));
    let denominator = IntPolynomial::from_i64(&[1, -1, -1]).pow(e);
    RationalGF {
        numerator,
        denominator,
    }
}

/// Coefficientwise sum of the expansions of `G_0..=G_{k_max}` through `x^m`.
pub fn sum_over_k(k_max: usize, m: usize) -> Result<Vec<BigInt>> {
    if k_max < m {
        return Err(Error::InvalidInput(format!(
            "k_max = {k_max} < m = {m} would drop terms below x^{m}"
        )));
    }
    let mut total = vec![BigInt::zero(); m + 1];
    // G_k starts at x^k, so only k <= m contributes.
    for k in 0..=m {
        for (t, c) in total.iter_mut().zip(gf_for_k(k).series_coefficients(m)?) {
            *t += c;
        }
    }
    Ok(total)
}
