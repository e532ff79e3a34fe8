//! Dense polynomials with arbitrary-precision integer coefficients, just
//! enough for expanding generating-function products.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficient sequence indexed by degree; trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPolynomial {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of the coefficients, i.e. the value at 1.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `Σ k·c_k`, the derivative at 1.
    pub fn derivative_at_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigInt::from(k))
            .sum()
    }

    /// `Σ k(k-1)·c_k`, the second derivative at 1.
    pub fn second_derivative_at_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigInt::from(k * k.saturating_sub(1)))
            .sum()
    }

    /// Expands `Π factor` over an iterator of polynomials.
    pub fn product(factors: impl IntoIterator<Item = IntPolynomial>) -> IntPolynomial {
        factors
            .into_iter()
            .fold(IntPolynomial::one(), |acc, f| acc.mul(&f))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_linear_factors() {
        // (1+2x)(1+3x) = 1 + 5x + 6x^2
        let p = IntPolynomial::from_i64(&[1, 2]).mul(&IntPolynomial::from_i64(&[1, 3]));
        assert_eq!(p, IntPolynomial::from_i64(&[1, 5, 6]));
        assert_eq!(p.eval_one(), BigInt::from(12));
    }

    #[test]
    fn trimming_and_zero() {
        let z = IntPolynomial::from_i64(&[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.mul(&IntPolynomial::one()), IntPolynomial::zero());
        assert_eq!(z.coeff(3), BigInt::zero());
    }

    #[test]
    fn derivatives_at_one() {
        let p = IntPolynomial::from_i64(&[1, 5, 6]);
        assert_eq!(p.derivative_at_one(), BigInt::from(17)); // 5 + 12
        assert_eq!(p.second_derivative_at_one(), BigInt::from(12)); // 2*6
    }

    #[test]
    fn display_form() {
        assert_eq!(
            IntPolynomial::from_i64(&[1, 9, 26, 24]).to_string(),
            "1 + 9x + 26x^2 + 24x^3"
        );
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn shift_by_power() {
        let p = IntPolynomial::from_i64(&[6, 5, 1]).shift(2);
        assert_eq!(p, IntPolynomial::from_i64(&[0, 0, 6, 5, 1]));
    }
}
