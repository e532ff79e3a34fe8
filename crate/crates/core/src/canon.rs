//! The canonical factorization over the layer sets.
//!
//! Every `v` in `A_n` (`n >= 3`) factors uniquely as `v = v_3 v_4 ... v_n`
//! with `v_i` drawn from `R_i = {(1 2)(j i) | 1 <= j < i} ∪ {e}`, the
//! rightmost factor acting first. The number of non-identity factors
//! equals the word length over the A-transpositions.
//!
//! Factors are encoded by the letter `j` (0 for the identity), so a
//! presentation serializes as the list `[f_3, ..., f_n]`.
//!
//! `canonicalize` peels one layer at a time: at level `i` it scans all of
//! `R_i` for the factor `r` with `v·r⁻¹` fixing the letter `i`, asserting
//! along the way that exactly one candidate works, then recurses on the
//! restriction to `i - 1` letters.

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::perm::Permutation;
use crate::report::VerificationReport;

/// Factor code for the identity element of a layer.
pub const IDENTITY_FACTOR: usize = 0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("not in A_n: permutation is odd")]
    NotEven,
    #[error("canonical presentation needs degree at least 3, got {0}")]
    DegreeTooSmall(usize),
    #[error("factor code {code} invalid at level {level} (expected 0..{level})")]
    BadFactor { level: usize, code: usize },
    #[error("factor count {got} does not match degree {degree} (expected {expected})")]
    FactorCountMismatch {
        degree: usize,
        expected: usize,
        got: usize,
    },
    #[error("({0} {1}) is not a transposition")]
    NotTransposition(usize, usize),
}

/// The factor list `(v_3, ..., v_n)` of one canonical presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPresentation {
    n: usize,
    factors: Vec<usize>,
}

impl CanonicalPresentation {
    /// Builds from factor codes, validating `factors[i-3] < i`.
    pub fn from_factors(
        n: usize,
        factors: Vec<usize>,
    ) -> Result<CanonicalPresentation, CanonError> {
        if n < 3 {
            return Err(CanonError::DegreeTooSmall(n));
        }
        if factors.len() != n - 2 {
            return Err(CanonError::FactorCountMismatch {
                degree: n,
                expected: n - 2,
                got: factors.len(),
            });
        }
        for (idx, &code) in factors.iter().enumerate() {
            let level = idx + 3;
            if code >= level {
                return Err(CanonError::BadFactor { level, code });
            }
        }
        Ok(CanonicalPresentation { n, factors })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Factor codes for levels `3..=n`; 0 encodes the identity, `j > 0`
    /// encodes `(1 2)(j i)`.
    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    /// The factor at a level, embedded at full degree.
    pub fn factor_permutation(&self, level: usize) -> Permutation {
        let code = self.factors[level - 3];
        factor_perm(self.n, level, code)
    }

    /// Number of non-identity factors; equals the A-transposition length.
    pub fn hat_length(&self) -> usize {
        self.factors
            .iter()
            .filter(|&&c| c != IDENTITY_FACTOR)
            .count()
    }

    /// JSON rendering `{"n": .., "factors": [..]}` with 0 for identity.
    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "factors": self.factors })
    }
}

impl fmt::Display for CanonicalPresentation {
    /// E.g. `v3=(1 2)(2 3), v4=e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, &code) in self.factors.iter().enumerate() {
            let level = idx + 3;
            if idx > 0 {
                f.write_str(", ")?;
            }
            if code == IDENTITY_FACTOR {
                write!(f, "v{level}=e")?;
            } else {
                write!(f, "v{level}=(1 2)({code} {level})")?;
            }
        }
        Ok(())
    }
}

fn factor_perm(degree: usize, level: usize, code: usize) -> Permutation {
    if code == IDENTITY_FACTOR {
        return Permutation::identity(degree);
    }
    let s1 = Permutation::transposition(degree, 1, 2).expect("letters in range");
    let t = Permutation::transposition(degree, code, level).expect("letters in range");
    s1.compose(&t).expect("equal degrees")
}

/// Computes the canonical presentation of an even permutation.
pub fn canonicalize(v: &Permutation) -> Result<CanonicalPresentation, CanonError> {
    let n = v.degree();
    if n < 3 {
        return Err(CanonError::DegreeTooSmall(n));
    }
    if !v.is_even() {
        return Err(CanonError::NotEven);
    }
    let mut factors = vec![IDENTITY_FACTOR; n - 2];
    let mut w = v.clone();
    for level in (3..=n).rev() {
        let mut admissible = Vec::new();
        for code in 0..level {
            let r = factor_perm(level, level, code);
            let peeled = w.compose(&r.inverse()).expect("equal degrees");
            if peeled.apply(level) == level {
                admissible.push((code, peeled));
            }
        }
        assert_eq!(
            admissible.len(),
            1,
            "layer factor at level {level} must be unique"
        );
        let (code, peeled) = admissible.pop().expect("exactly one");
        factors[level - 3] = code;
        w = peeled.restrict_to(level - 1).expect("letter is fixed");
    }
    debug_assert!(w.is_identity(), "even residue of degree 2 must be e");
    Ok(CanonicalPresentation { n, factors })
}

/// Multiplies the factors back together (rightmost factor first).
pub fn reconstruct(p: &CanonicalPresentation) -> Permutation {
    let mut acc = Permutation::identity(p.n);
    for level in 3..=p.n {
        acc = acc
            .compose(&p.factor_permutation(level))
            .expect("equal degrees");
    }
    acc
}

/// Count of non-identity factors.
pub fn hat_length(p: &CanonicalPresentation) -> usize {
    p.hat_length()
}

/// Rewrites a product of transpositions so that the letter `m` appears in
/// the last factor only, preserving the product and the factor count.
///
/// Factors multiply right-to-left (last factor first). Pairs are rewritten
/// repeatedly: disjoint factors commute; factors sharing one letter obey
/// the 3-cycle identities `(m x)(x z) = (x z)(z m)` and
/// `(m x)(m z) = (z x)(x m)`; an equal pair multiplies to the identity and
/// is replaced by an equal pair avoiding `m`.
pub fn rewrite_rightmost(
    factors: &[(usize, usize)],
    m: usize,
) -> Result<Vec<(usize, usize)>, CanonError> {
    if m < 1 {
        return Err(CanonError::NotTransposition(m, m));
    }
    for &(a, b) in factors {
        if a < 1 || b < 1 || a == b {
            return Err(CanonError::NotTransposition(a, b));
        }
    }
    let mut seq: Vec<(usize, usize)> = factors.to_vec();
    if seq.len() < 2 {
        return Ok(seq);
    }
    let contains = |f: (usize, usize), letter: usize| f.0 == letter || f.1 == letter;
    while let Some(pos) = seq[..seq.len() - 1].iter().position(|&f| contains(f, m)) {
        let f = seq[pos];
        let g = seq[pos + 1];
        let x = if f.0 == m { f.1 } else { f.0 };
        let (new_f, new_g) = if (g.0 == f.0 || g.0 == f.1) && (g.1 == f.0 || g.1 == f.1) {
            // f = g: the pair is the identity; re-express it without m.
            let mut fresh = (1..).filter(|&c| c != m);
            let a = fresh.next().expect("unbounded");
            let b = fresh.next().expect("unbounded");
            ((a, b), (a, b))
        } else if contains(g, m) {
            // (m x)(m z) = (z x)(x m)
            let z = if g.0 == m { g.1 } else { g.0 };
            ((z, x), (x, m))
        } else if contains(g, x) {
            // (m x)(x z) = (x z)(z m)
            let z = if g.0 == x { g.1 } else { g.0 };
            ((x, z), (z, m))
        } else {
            (g, f)
        };
        seq[pos] = new_f;
        seq[pos + 1] = new_g;
    }
    Ok(seq)
}

/// Product of a transposition sequence as a permutation of `{1..=degree}`.
pub fn transposition_product(
    factors: &[(usize, usize)],
    degree: usize,
) -> Result<Permutation, CanonError> {
    let mut acc = Permutation::identity(degree);
    for &(a, b) in factors {
        if a == b {
            return Err(CanonError::NotTransposition(a, b));
        }
        let t = Permutation::transposition(degree, a, b)
            .map_err(|_| CanonError::NotTransposition(a, b))?;
        acc = acc.compose(&t).expect("equal degrees");
    }
    Ok(acc)
}

/// Exhaustive check of the canonical presentation over `A_n` for
/// `3 <= n <= n_max`: factors reconstruct, the hat length matches the
/// closed-form length, and the `Π|R_i| = n!/2` products are pairwise
/// distinct.
pub fn verify_canonical(n_max: usize) -> VerificationReport {
    use std::collections::BTreeSet;

    let mut report = VerificationReport::new("canonical presentation");
    for n in 3..=n_max {
        let group = match crate::oracle::enumerate_group(crate::oracle::Group::Alternating, n, None)
        {
            Ok(g) => g,
            Err(e) => {
                report.record(format!("enumerate A_{n}"), false, e.to_string());
                return report;
            }
        };
        let mut round_trip = true;
        let mut lengths_match = true;
        for v in &group {
            let p = canonicalize(v).expect("even permutation");
            if &reconstruct(&p) != v {
                round_trip = false;
            }
            if p.hat_length() != crate::lengths::length_ta(v).expect("even") {
                lengths_match = false;
            }
        }
        report.record(
            format!("reconstruct ∘ canonicalize = id on A_{n}"),
            round_trip,
            format!("{} elements", group.len()),
        );
        report.record(
            format!("hat length = closed-form length on A_{n}"),
            lengths_match,
            String::new(),
        );

        // Bijectivity of the product map R_3 × ... × R_n -> A_n.
        let mut products: BTreeSet<Permutation> = BTreeSet::new();
        let mut codes = vec![0usize; n - 2];
        let expected: usize = (3..=n).product();
        loop {
            let p = CanonicalPresentation {
                n,
                factors: codes.clone(),
            };
            products.insert(reconstruct(&p));
            // Odometer over the mixed-radix factor codes.
            let mut idx = 0;
            loop {
                if idx == codes.len() {
                    break;
                }
                codes[idx] += 1;
                if codes[idx] < idx + 3 {
                    break;
                }
                codes[idx] = 0;
                idx += 1;
            }
            if idx == codes.len() {
                break;
            }
        }
        report.record(
            format!("Π|R_i| products distinct and cover A_{n}"),
            products.len() == expected && products.len() == group.len(),
            format!("{expected} products"),
        );
    }
    report
}

/// Random-product check of `rewrite_rightmost`: the product and factor
/// count are preserved and the chosen letter ends up in the last factor
/// only. Deterministic xorshift sampling.
pub fn verify_rewrite(
    samples: usize,
    max_len: usize,
    max_letter: usize,
    seed: u64,
) -> VerificationReport {
    let mut report = VerificationReport::new("rightmost rewriting");
    let mut state = seed.max(1);
    let mut next = move |bound: usize| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % bound as u64) as usize
    };
    let mut checked = 0usize;
    for _ in 0..samples {
        let len = 1 + next(max_len);
        let mut factors = Vec::with_capacity(len);
        for _ in 0..len {
            let a = 1 + next(max_letter);
            let mut b = 1 + next(max_letter);
            while b == a {
                b = 1 + next(max_letter);
            }
            factors.push((a, b));
        }
        let m = 1 + next(max_letter);
        let rewritten = rewrite_rightmost(&factors, m).expect("valid transpositions");
        let same_len = rewritten.len() == factors.len();
        let degree = max_letter.max(3);
        let same_product = transposition_product(&factors, degree).expect("valid")
            == transposition_product(&rewritten, degree).expect("valid");
        let isolated = rewritten[..rewritten.len() - 1]
            .iter()
            .all(|&(a, b)| a != m && b != m);
        if !(same_len && same_product && isolated) {
            report.record(
                "rewrite",
                false,
                format!("counterexample: factors {factors:?}, m={m}, got {rewritten:?}"),
            );
            return report;
        }
        checked += 1;
    }
    report.record(
        "product, length and isolation preserved",
        true,
        format!("{checked} random sequences (len <= {max_len}, letters <= {max_letter})"),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lengths::length_ta;

    fn cycles(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn identity_canonicalizes_to_identity_factors() {
        let p = canonicalize(&Permutation::identity(5)).unwrap();
        assert_eq!(p.factors(), &[0, 0, 0]);
        assert_eq!(p.hat_length(), 0);
        assert_eq!(reconstruct(&p), Permutation::identity(5));
    }

    #[test]
    fn three_cycle_in_a3() {
        let p = canonicalize(&cycles("(1 2 3)", 3)).unwrap();
        assert_eq!(p.factors(), &[2]); // v_3 = (1 2)(2 3)
        assert_eq!(p.hat_length(), 1);
    }

    #[test]
    fn double_transposition_in_a4() {
        let v = cycles("(1 3)(2 4)", 4);
        let p = canonicalize(&v).unwrap();
        assert_eq!(p.factors(), &[2, 2]); // v_3 = (1 2)(2 3), v_4 = (1 2)(2 4)
        assert_eq!(p.hat_length(), 2);
        assert_eq!(reconstruct(&p), v);
        assert_eq!(p.to_string(), "v3=(1 2)(2 3), v4=(1 2)(2 4)");
        assert_eq!(p.to_json().to_string(), r#"{"factors":[2,2],"n":4}"#);
    }

    #[test]
    fn single_factor_reconstructs_the_generator() {
        let p = CanonicalPresentation::from_factors(5, vec![0, 0, 1]).unwrap();
        assert_eq!(reconstruct(&p), cycles("(1 2)(1 5)", 5));
        assert_eq!(p.hat_length(), 1);
    }

    #[test]
    fn rejects_odd_and_small() {
        assert_eq!(canonicalize(&cycles("(1 2)", 3)), Err(CanonError::NotEven));
        assert_eq!(
            canonicalize(&Permutation::identity(2)),
            Err(CanonError::DegreeTooSmall(2))
        );
        assert!(matches!(
            CanonicalPresentation::from_factors(4, vec![0, 4]),
            Err(CanonError::BadFactor { level: 4, code: 4 })
        ));
        assert!(matches!(
            CanonicalPresentation::from_factors(4, vec![0]),
            Err(CanonError::FactorCountMismatch { .. })
        ));
    }

    #[test]
    fn canonicalize_round_trips_on_a5() {
        for v in crate::oracle::enumerate_group(crate::oracle::Group::Alternating, 5, None).unwrap()
        {
            let p = canonicalize(&v).unwrap();
            assert_eq!(reconstruct(&p), v);
            assert_eq!(canonicalize(&reconstruct(&p)).unwrap(), p);
            assert_eq!(p.hat_length(), length_ta(&v).unwrap());
        }
    }

    #[test]
    fn rewrite_disjoint_pair_swaps() {
        let out = rewrite_rightmost(&[(5, 1), (3, 4)], 5).unwrap();
        assert_eq!(out, vec![(3, 4), (5, 1)]);
    }

    #[test]
    fn rewrite_shared_letter_pair() {
        // (1 2)(2 4) = (2 4)(4 1)
        let out = rewrite_rightmost(&[(1, 2), (2, 4)], 1).unwrap();
        assert_eq!(out, vec![(2, 4), (4, 1)]);
        let before = transposition_product(&[(1, 2), (2, 4)], 4).unwrap();
        let after = transposition_product(&out, 4).unwrap();
        assert_eq!(before, after);
    }

    #[test]
    fn rewrite_identity_pair() {
        let out = rewrite_rightmost(&[(1, 3), (1, 3), (2, 4)], 1).unwrap();
        assert_eq!(out.len(), 3);
        let before = transposition_product(&[(1, 3), (1, 3), (2, 4)], 4).unwrap();
        assert_eq!(transposition_product(&out, 4).unwrap(), before);
        assert!(out[..2].iter().all(|&(a, b)| a != 1 && b != 1));
    }

    #[test]
    fn rewrite_rejects_non_transposition() {
        assert_eq!(
            rewrite_rightmost(&[(2, 2)], 1),
            Err(CanonError::NotTransposition(2, 2))
        );
    }

    #[test]
    fn verify_small_degrees() {
        assert!(verify_canonical(5).passed());
        assert!(verify_rewrite(500, 6, 8, 0x5eed).passed());
    }
}
