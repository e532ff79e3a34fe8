//! Length statistics and the length/cycle dictionary.
//!
//! Three word lengths have closed forms:
//!
//! * `inv_count` — inversions, the Coxeter length on `S_n`;
//! * `length_t` — `n - cyc(v)`, the length over all transpositions of `S_n`;
//! * `length_ta` — the length over the A-transpositions of `A_n`:
//!   `n - cyc(v)` when 1 and 2 sit in different cycles, `n - cyc(v) - 1`
//!   when they share one.
//!
//! The letters 1 and 2 share a cycle exactly when `length_ta` is odd, and
//! every element of a given `length_ta` has the same cycle count `m(n, k)`.

use serde_json::{json, Value};
use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LengthError {
    #[error("not in A_n: permutation is odd")]
    OddPermutation,
    #[error("k={k} outside the length support 0..={max} for n={n}")]
    OutsideSupport { n: usize, k: usize, max: usize },
}

/// Inversion count; equals the Coxeter length on `S_n`.
pub fn inv_count(v: &Permutation) -> usize {
    let images = v.images();
    let n = images.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if images[i] > images[j] {
                count += 1;
            }
        }
    }
    count
}

/// Word length over all transpositions: `n - cyc(v)`.
pub fn length_t(v: &Permutation) -> usize {
    v.degree() - v.cycle_count()
}

/// Word length over the A-transpositions `(1 2)(i j)`.
///
/// For degree below 2 the only (even) permutation is the identity, of
/// length 0.
pub fn length_ta(v: &Permutation) -> Result<usize, LengthError> {
    if !v.is_even() {
        return Err(LengthError::OddPermutation);
    }
    let n = v.degree();
    if n < 2 {
        return Ok(0);
    }
    let base = n - v.cycle_count();
    if v.same_cycle(1, 2).expect("letters 1,2 in range") {
        Ok(base - 1)
    } else {
        Ok(base)
    }
}

/// Common cycle count of the elements of `A_n` with `length_ta = k`:
/// `n - k` for even `k`, `n - k - 1` for odd `k`.
pub fn m_of(n: usize, k: usize) -> Result<usize, LengthError> {
    if n < 2 || k + 2 > n {
        let max = n.saturating_sub(2);
        return Err(LengthError::OutsideSupport { n, k, max });
    }
    Ok(if k.is_multiple_of(2) {
        n - k
    } else {
        n - k - 1
    })
}

/// The parity law for a single even permutation: 1 and 2 share a cycle
/// iff the A-transposition length is odd.
pub fn length_parity_consistent(v: &Permutation) -> Result<bool, LengthError> {
    let len = length_ta(v)?;
    let shared = if v.degree() < 2 {
        false
    } else {
        v.same_cycle(1, 2).expect("letters 1,2 in range")
    };
    Ok(shared == (len % 2 == 1))
}

/// Every closed-form length statistic of one permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthReport {
    pub perm: Permutation,
    pub inv: usize,
    pub len_t: usize,
    /// Present only for even permutations.
    pub len_ta: Option<usize>,
    /// Whether the letters 1 and 2 share a cycle (false for degree 1).
    pub same_cycle_12: bool,
}

pub fn report(v: &Permutation) -> LengthReport {
    let same_cycle_12 = if v.degree() >= 2 {
        v.same_cycle(1, 2).expect("letters 1,2 in range")
    } else {
        false
    };
    LengthReport {
        perm: v.clone(),
        inv: inv_count(v),
        len_t: length_t(v),
        len_ta: length_ta(v).ok(),
        same_cycle_12,
    }
}

impl LengthReport {
    pub fn to_json(&self) -> Value {
        json!({
            "perm": self.perm.to_json(),
            "inv": self.inv,
            "len_t": self.len_t,
            "len_ta": self.len_ta,
            "same_cycle_12": self.same_cycle_12,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cycles(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn inv_examples() {
        assert_eq!(inv_count(&Permutation::identity(5)), 0);
        assert_eq!(inv_count(&Permutation::parse_one_line("2 1 3").unwrap()), 1);
        for n in 2..=7 {
            let reversed = Permutation::from_images((1..=n).rev().collect()).unwrap();
            assert_eq!(inv_count(&reversed), n * (n - 1) / 2);
        }
    }

    #[test]
    fn length_t_examples() {
        assert_eq!(length_t(&Permutation::identity(5)), 0);
        assert_eq!(length_t(&cycles("(2 5)", 6)), 1);
        assert_eq!(length_t(&cycles("(1 2 3)", 4)), 2);
    }

    #[test]
    fn length_ta_examples() {
        assert_eq!(length_ta(&Permutation::identity(4)).unwrap(), 0);
        assert_eq!(length_ta(&cycles("(1 2)(3 4)", 4)).unwrap(), 1);
        assert_eq!(length_ta(&cycles("(1 3)(2 4)", 4)).unwrap(), 2);
        assert_eq!(
            length_ta(&cycles("(1 2)", 2)),
            Err(LengthError::OddPermutation)
        );
        assert_eq!(length_ta(&Permutation::identity(1)).unwrap(), 0);
    }

    #[test]
    fn bridge_between_lengths() {
        // For even v: len_T = len_TA + (len_TA mod 2), and len_T is even.
        for n in 2..=6 {
            for v in
                crate::oracle::enumerate_group(crate::oracle::Group::Alternating, n, None).unwrap()
            {
                let lt = length_t(&v);
                let lta = length_ta(&v).unwrap();
                assert_eq!(lt, lta + lta % 2);
                assert_eq!(lt % 2, 0);
            }
        }
    }

    #[test]
    fn m_of_examples() {
        assert_eq!(m_of(4, 1).unwrap(), 2);
        assert_eq!(m_of(4, 0).unwrap(), 4);
        assert_eq!(m_of(4, 2).unwrap(), 2);
        assert!(m_of(4, 3).is_err());
        assert!(m_of(1, 0).is_err());
    }

    #[test]
    fn parity_examples() {
        assert!(length_parity_consistent(&Permutation::identity(4)).unwrap());
        assert!(length_parity_consistent(&cycles("(1 2)(3 4)", 4)).unwrap());
        assert!(length_parity_consistent(&cycles("(1 3)(2 4)", 4)).unwrap());
    }

    #[test]
    fn report_on_odd_permutation() {
        let r = report(&cycles("(1 2)", 3));
        assert_eq!(r.inv, 1);
        assert_eq!(r.len_t, 1);
        assert_eq!(r.len_ta, None);
        assert!(r.same_cycle_12);
    }
}
