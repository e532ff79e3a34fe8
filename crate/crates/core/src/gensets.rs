//! The generating sets under study.
//!
//! Four sets and one layer family, all given as explicit element lists:
//!
//! * `Coxeter` — adjacent transpositions `(i, i+1)` generating `S_n`;
//! * `Transpositions` — all transpositions `(i, j)` of `S_n`;
//! * `Mitsuhashi` — `a_i = (1 2)(i, i+1)` for `2 <= i <= n-1`, a
//!   Coxeter-like generating set for `A_n`;
//! * `ATranspositions` — the palindromic products `a_ij = (1 2)(i j)`,
//!   the central generating set for `A_n`;
//! * `LayerR` — `R_n = {(1 2)(i n) | 1 <= i < n} ∪ {e}`, the factor
//!   alphabet of the canonical presentation at level `n`.
//!
//! `a_12 = (1 2)(1 2) = e` is excluded from `ATranspositions`: a word
//! alphabet cannot contain the identity, and the length-one elements of
//! `A_n` are exactly the remaining `n(n-1)/2 - 1` products.

use std::fmt;

use thiserror::Error;

use crate::perm::{Permutation, MAX_DEGREE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenSetError {
    #[error("{kind} needs degree at least {min}, got {n}")]
    DegreeBelowMinimum {
        kind: GenSetKind,
        min: usize,
        n: usize,
    },
    #[error("degree {0} above the permutation cap {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("degree mismatch: set has degree {expected}, element has degree {got}")]
    DegreeMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenSetKind {
    Coxeter,
    Transpositions,
    Mitsuhashi,
    ATranspositions,
    LayerR,
}

impl GenSetKind {
    pub const ALL: [GenSetKind; 5] = [
        GenSetKind::Coxeter,
        GenSetKind::Transpositions,
        GenSetKind::Mitsuhashi,
        GenSetKind::ATranspositions,
        GenSetKind::LayerR,
    ];

    /// Name used on the command line.
    pub fn cli_name(&self) -> &'static str {
        match self {
            GenSetKind::Coxeter => "coxeter",
            GenSetKind::Transpositions => "transpositions",
            GenSetKind::Mitsuhashi => "mitsuhashi",
            GenSetKind::ATranspositions => "a-transpositions",
            GenSetKind::LayerR => "layer-r",
        }
    }

    pub fn parse_cli(name: &str) -> Option<GenSetKind> {
        GenSetKind::ALL
            .iter()
            .copied()
            .find(|k| k.cli_name() == name)
    }

    /// Smallest degree the definition makes sense for.
    pub fn min_degree(&self) -> usize {
        match self {
            GenSetKind::Coxeter | GenSetKind::Transpositions | GenSetKind::ATranspositions => 2,
            GenSetKind::Mitsuhashi | GenSetKind::LayerR => 3,
        }
    }

    /// Whether the elements are even permutations (a set for `A_n` rather
    /// than `S_n`).
    pub fn is_alternating(&self) -> bool {
        !matches!(self, GenSetKind::Coxeter | GenSetKind::Transpositions)
    }
}

impl fmt::Display for GenSetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

/// An explicit, deduplicated, sorted element list for one generating set.
///
/// The identity appears only in `LayerR` sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    kind: GenSetKind,
    n: usize,
    elements: Vec<Permutation>,
    symmetric_closure: bool,
}

impl GeneratorSet {
    pub fn kind(&self) -> GenSetKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn symmetric_closure(&self) -> bool {
        self.symmetric_closure
    }

    pub fn contains(&self, v: &Permutation) -> bool {
        self.elements.binary_search(v).is_ok()
    }
}

/// Builds the element list of a generating set, optionally adjoining
/// inverses. Elements are deduplicated and sorted by one-line form.
pub fn build(
    kind: GenSetKind,
    n: usize,
    symmetric_closure: bool,
) -> Result<GeneratorSet, GenSetError> {
    let min = kind.min_degree();
    if n < min {
        return Err(GenSetError::DegreeBelowMinimum { kind, min, n });
    }
    if n > MAX_DEGREE {
        return Err(GenSetError::DegreeTooLarge(n));
    }
    let t = |a, b| Permutation::transposition(n, a, b).expect("letters in range");
    let s1 = t(1, 2);
    let a_of = |i: usize, j: usize| s1.compose(&t(i, j)).expect("equal degrees");

    let mut elements: Vec<Permutation> = match kind {
        GenSetKind::Coxeter => (1..n).map(|i| t(i, i + 1)).collect(),
        GenSetKind::Transpositions => (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| t(i, j))
            .collect(),
        GenSetKind::Mitsuhashi => (2..n).map(|i| a_of(i, i + 1)).collect(),
        GenSetKind::ATranspositions => (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| (i, j) != (1, 2))
            .map(|(i, j)| a_of(i, j))
            .collect(),
        GenSetKind::LayerR => std::iter::once(Permutation::identity(n))
            .chain((1..n).map(|i| a_of(i, n)))
            .collect(),
    };

    if symmetric_closure {
        let inverses: Vec<Permutation> = elements.iter().map(Permutation::inverse).collect();
        elements.extend(inverses);
    }
    elements.sort_unstable();
    elements.dedup();

    Ok(GeneratorSet {
        kind,
        n,
        elements,
        symmetric_closure,
    })
}

/// Membership test against the set built without closure.
pub fn is_member(kind: GenSetKind, n: usize, v: &Permutation) -> Result<bool, GenSetError> {
    if v.degree() != n {
        return Err(GenSetError::DegreeMismatch {
            expected: n,
            got: v.degree(),
        });
    }
    Ok(build(kind, n, false)?.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn cycles(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn element_counts() {
        for n in 2..=8 {
            assert_eq!(build(GenSetKind::Coxeter, n, false).unwrap().len(), n - 1);
            assert_eq!(
                build(GenSetKind::Transpositions, n, false).unwrap().len(),
                n * (n - 1) / 2
            );
            assert_eq!(
                build(GenSetKind::ATranspositions, n, false).unwrap().len(),
                n * (n - 1) / 2 - 1
            );
        }
        for n in 3..=8 {
            assert_eq!(
                build(GenSetKind::Mitsuhashi, n, false).unwrap().len(),
                n - 2
            );
            assert_eq!(build(GenSetKind::LayerR, n, false).unwrap().len(), n);
        }
    }

    #[test]
    fn layer_r3_is_a3() {
        let r3 = build(GenSetKind::LayerR, 3, false).unwrap();
        let expected: BTreeSet<Permutation> = [
            Permutation::identity(3),
            cycles("(1 2)(1 3)", 3),
            cycles("(1 2)(2 3)", 3),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Permutation> = r3.elements().iter().cloned().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn coxeter_n2() {
        let c = build(GenSetKind::Coxeter, 2, false).unwrap();
        assert_eq!(c.elements(), &[cycles("(1 2)", 2)]);
    }

    #[test]
    fn membership_examples() {
        assert!(!is_member(GenSetKind::ATranspositions, 4, &cycles("(1 3)(2 4)", 4)).unwrap());
        assert!(is_member(GenSetKind::ATranspositions, 4, &cycles("(1 2)(3 4)", 4)).unwrap());
        assert!(is_member(GenSetKind::LayerR, 5, &Permutation::identity(5)).unwrap());
        assert!(matches!(
            is_member(GenSetKind::LayerR, 5, &Permutation::identity(4)),
            Err(GenSetError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn min_degree_errors() {
        assert!(build(GenSetKind::Mitsuhashi, 2, false).is_err());
        assert!(build(GenSetKind::LayerR, 2, false).is_err());
        assert!(build(GenSetKind::Coxeter, 1, false).is_err());
    }

    #[test]
    fn a_transpositions_inverse_closed() {
        for n in 2..=8 {
            let set = build(GenSetKind::ATranspositions, n, false).unwrap();
            for g in set.elements() {
                assert!(
                    set.contains(&g.inverse()),
                    "inverse of {g} missing at n={n}"
                );
            }
            // Closure therefore changes nothing.
            let closed = build(GenSetKind::ATranspositions, n, true).unwrap();
            assert_eq!(set.elements(), closed.elements());
        }
    }

    #[test]
    fn mitsuhashi_closure_adds_inverse_three_cycles() {
        let open = build(GenSetKind::Mitsuhashi, 4, false).unwrap();
        let closed = build(GenSetKind::Mitsuhashi, 4, true).unwrap();
        assert_eq!(open.len(), 2);
        assert_eq!(closed.len(), 3); // a_2 = (1 2 3) gains its inverse, a_3 is an involution
        assert!(closed.contains(&cycles("(1 3 2)", 4)));
    }

    #[test]
    fn layer_union_is_disjoint_and_rebuilds_ta() {
        // T(A_n) = T(A_{n-1}) ∪ (R_n \ {e}) as a disjoint union.
        for n in 3..=8 {
            let ta: BTreeSet<Permutation> = build(GenSetKind::ATranspositions, n, false)
                .unwrap()
                .elements()
                .iter()
                .cloned()
                .collect();
            let prev: BTreeSet<Permutation> = build(GenSetKind::ATranspositions, n - 1, false)
                .unwrap()
                .elements()
                .iter()
                .map(|p| p.extend_to(n).unwrap())
                .collect();
            let layer: BTreeSet<Permutation> = build(GenSetKind::LayerR, n, false)
                .unwrap()
                .elements()
                .iter()
                .filter(|p| !p.is_identity())
                .cloned()
                .collect();
            assert_eq!(layer.len(), n - 1);
            assert!(prev.is_disjoint(&layer));
            let union: BTreeSet<Permutation> = prev.union(&layer).cloned().collect();
            assert_eq!(union, ta);
            // Every layer element moves the letter n.
            for p in &layer {
                assert_ne!(p.apply(n), n);
            }
        }
    }

    #[test]
    fn generator_count_matches_the_length_one_class() {
        // A(n, 1) is exactly the generating set.
        let a = crate::tables::a_table(8);
        for n in 3..=8 {
            let count = build(GenSetKind::ATranspositions, n, false).unwrap().len();
            assert_eq!(a.get(n, 1), num_bigint::BigInt::from(count));
        }
    }

    #[test]
    fn alternating_sets_are_even() {
        for kind in [
            GenSetKind::Mitsuhashi,
            GenSetKind::ATranspositions,
            GenSetKind::LayerR,
        ] {
            for n in 3..=7 {
                for g in build(kind, n, true).unwrap().elements() {
                    assert_eq!(g.sign(), 1);
                }
            }
        }
    }
}
