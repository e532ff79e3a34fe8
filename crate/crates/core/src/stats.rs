//! Harmonic numbers and the exact moments of the A-transposition length.
//!
//! The expectation and variance over `A_n` have the closed forms
//! `E = n - H_n - 1/2` and `Var = H_n - H_{n,2} - 1/4`. Both are also
//! computed independently from the generating function via
//! `E = F'(1)/|A|` and `Var = (F''(1) + F'(1) - F'(1)^2/|A|)/|A|`.
//! Everything stays in exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::tables::genfunc_a;

/// Exact rational: arbitrary-precision, reduced, positive denominator.
pub type ExactRational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("moments need degree at least 2, got {0}")]
    DegreeTooSmall(usize),
}

fn ratio(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `H_n = 1 + 1/2 + ... + 1/n`; the empty sum `H_0` is 0.
pub fn harmonic(n: usize) -> ExactRational {
    harmonic_gen(n, 1)
}

/// Generalized harmonic number of order `m`: `1 + 1/2^m + ... + 1/n^m`.
pub fn harmonic_gen(n: usize, m: u32) -> ExactRational {
    assert!(m >= 1, "order must be at least 1");
    (1..=n)
        .map(|i| BigRational::new(BigInt::one(), BigInt::from(i).pow(m)))
        .fold(BigRational::zero(), |acc, term| acc + term)
}

/// `E[len_ta] = n - H_n - 1/2` on `A_n`.
pub fn expectation_closed(n: usize) -> Result<ExactRational, StatsError> {
    if n < 2 {
        return Err(StatsError::DegreeTooSmall(n));
    }
    Ok(ratio(n as i64, 1) - harmonic(n) - ratio(1, 2))
}

/// `Var[len_ta] = H_n - H_{n,2} - 1/4` on `A_n`.
pub fn variance_closed(n: usize) -> Result<ExactRational, StatsError> {
    if n < 2 {
        return Err(StatsError::DegreeTooSmall(n));
    }
    Ok(harmonic(n) - harmonic_gen(n, 2) - ratio(1, 4))
}

/// `(E, Var)` recovered from the generating-function product instead of
/// the closed forms.
pub fn moments_from_genfunc(n: usize) -> Result<(ExactRational, ExactRational), StatsError> {
    let poly = genfunc_a(n).map_err(|_| StatsError::DegreeTooSmall(n))?;
    let total = poly.eval_one();
    let f1 = poly.derivative_at_one();
    let f2 = poly.second_derivative_at_one();
    let total_r = BigRational::from_integer(total);
    let f1_r = BigRational::from_integer(f1);
    let f2_r = BigRational::from_integer(f2);
    let expectation = &f1_r / &total_r;
    let variance = (&f2_r + &f1_r - &f1_r * &f1_r / &total_r) / &total_r;
    Ok((expectation, variance))
}

/// Decimal rendering of an exact rational, for display only.
pub fn to_f64(x: &ExactRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact agreement of the two moment routes for `2 <= n <= n_max`, with
/// the small-degree spot values pinned.
pub fn verify_moments(n_max: usize) -> crate::report::VerificationReport {
    let mut report = crate::report::VerificationReport::new("moments");
    let agree = (2..=n_max).all(|n| {
        let (e, var) = moments_from_genfunc(n).expect("n >= 2");
        e == expectation_closed(n).expect("n >= 2") && var == variance_closed(n).expect("n >= 2")
    });
    report.record(
        "closed forms = generating-function moments",
        agree,
        format!("exact rationals, n in 2..={n_max}"),
    );
    let spots = expectation_closed(3).expect("n >= 2") == ratio(2, 3)
        && variance_closed(3).expect("n >= 2") == ratio(2, 9)
        && expectation_closed(4).expect("n >= 2") == ratio(17, 12);
    report.record("spot values E(3), Var(3), E(4)", spots, "2/3, 2/9, 17/12");
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), BigRational::zero());
        assert_eq!(harmonic(1), ratio(1, 1));
        assert_eq!(harmonic(3), ratio(11, 6));
        assert_eq!(harmonic_gen(3, 2), ratio(49, 36));
        assert_eq!(harmonic_gen(4, 1), harmonic(4));
    }

    #[test]
    fn closed_form_spot_values() {
        // A_3 lengths are {0, 1, 1}: mean 2/3, variance 2/9.
        assert_eq!(expectation_closed(3).unwrap(), ratio(2, 3));
        assert_eq!(variance_closed(3).unwrap(), ratio(2, 9));
        // A_4: sum of k·a(4,k) = 5 + 12 = 17 over 12 elements.
        assert_eq!(expectation_closed(4).unwrap(), ratio(17, 12));
        assert_eq!(expectation_closed(2).unwrap(), BigRational::zero());
        assert_eq!(variance_closed(2).unwrap(), BigRational::zero());
        assert!(expectation_closed(1).is_err());
    }

    #[test]
    fn genfunc_route_matches_closed_forms() {
        for n in 2..=30 {
            let (e, var) = moments_from_genfunc(n).unwrap();
            assert_eq!(e, expectation_closed(n).unwrap(), "E at n={n}");
            assert_eq!(var, variance_closed(n).unwrap(), "Var at n={n}");
        }
    }

    #[test]
    fn expectation_stays_inside_support() {
        for n in 4..=30 {
            let e = expectation_closed(n).unwrap();
            assert!(e > BigRational::zero());
            assert!(e < ratio((n - 2) as i64, 1));
        }
    }
}
