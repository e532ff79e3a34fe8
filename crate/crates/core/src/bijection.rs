//! The explicit bijection between length classes of `A_n` and cycle
//! classes of `S_n`.
//!
//! `A(n, k)` collects the elements of `A_n` of A-transposition length `k`;
//! `P(n, k)` collects the permutations of `S_n` with `k` cycles in which
//! the letters 1 and 2 sit in different cycles. The map
//!
//! `f(v) = v` for even length, `f(v) = (1 2)·v` for odd length
//!
//! carries `A(n, k)` bijectively onto `P(n, n-k)`, whose size is the
//! 2-restricted Stirling number `[n, n-k]_2`.

use thiserror::Error;

use crate::lengths::{length_ta, LengthError};
use crate::oracle::{self, Group, OracleError};
use crate::perm::Permutation;
use crate::report::VerificationReport;
use crate::tables;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error(transparent)]
    Length(#[from] LengthError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// One class of permutations sharing a statistic value, sorted by
/// one-line form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthClass {
    pub n: usize,
    pub k: usize,
    pub elements: Vec<Permutation>,
}

impl LengthClass {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `A(n, k)`: elements of `A_n` of length `k`, exhaustively.
pub fn enumerate_a(n: usize, k: usize) -> Result<LengthClass, BijectionError> {
    let elements = oracle::enumerate_group(Group::Alternating, n, None)?
        .into_iter()
        .filter(|v| length_ta(v).expect("even") == k)
        .collect();
    Ok(LengthClass { n, k, elements })
}

/// `P(n, k)`: permutations of `S_n` with `k` cycles and the letters 1, 2
/// in different cycles, exhaustively.
pub fn enumerate_p(n: usize, k: usize) -> Result<LengthClass, BijectionError> {
    let elements = oracle::enumerate_group(Group::Symmetric, n, None)?
        .into_iter()
        .filter(|v| v.cycle_count() == k && !v.same_cycle(1, 2).expect("letters in range"))
        .collect();
    Ok(LengthClass { n, k, elements })
}

/// The bijection: identity on even lengths, left multiplication by
/// `(1 2)` on odd lengths. Errors on odd permutations.
pub fn f_map(v: &Permutation) -> Result<Permutation, BijectionError> {
    let len = length_ta(v)?;
    if len.is_multiple_of(2) {
        Ok(v.clone())
    } else {
        let s1 = Permutation::transposition(v.degree(), 1, 2).expect("letters in range");
        Ok(s1.compose(v).expect("equal degrees"))
    }
}

/// Checks, for every `0 <= k <= n-2`, that `f` maps `A(n, k)` injectively
/// onto exactly `P(n, n-k)` and that the class sizes match the
/// 2-restricted Stirling numbers.
pub fn verify_bijection(n: usize) -> Result<VerificationReport, BijectionError> {
    let mut report = VerificationReport::new(format!("bijection A(n,k) -> P(n,n-k) at n={n}"));
    let restricted = tables::rstirling1(n, 2);
    for k in 0..=n.saturating_sub(2) {
        let source = enumerate_a(n, k)?;
        let target = enumerate_p(n, n - k)?;
        let mut images: Vec<Permutation> = source
            .elements
            .iter()
            .map(f_map)
            .collect::<Result<_, _>>()?;
        images.sort_unstable();
        let injective = images.windows(2).all(|w| w[0] != w[1]);
        let onto = images == target.elements;
        let counted = num_bigint::BigInt::from(target.len()) == restricted.get(n, (n - k) as i64);
        report.record(
            format!("k={k}"),
            injective && onto && counted,
            format!(
                "|A({n},{k})| = {}, |P({n},{})| = {}, [n,n-k]_2 = {}",
                source.len(),
                n - k,
                target.len(),
                restricted.get(n, (n - k) as i64)
            ),
        );
    }
    Ok(report)
}
