//! Brute-force ground truth: exhaustive group enumeration and exact
//! breadth-first word lengths over any of the generating sets.
//!
//! Distances live in a flat array indexed by the Lehmer rank of the
//! one-line form, so visited checks are O(1). The census is deterministic:
//! lexicographic enumeration, FIFO expansion, and a fixed generator order.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::gensets::{self, GenSetError, GenSetKind};
use crate::lengths;
use crate::perm::Permutation;
use crate::report::VerificationReport;
use crate::tables;

/// Default enumeration cap for the symmetric group (8! = 40320).
pub const DEFAULT_CAP_SYMMETRIC: usize = 8;
/// Default enumeration cap for the alternating group (9!/2 = 181440).
pub const DEFAULT_CAP_ALTERNATING: usize = 9;

const UNREACHED: u8 = u8::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("degree {n} exceeds the cap {cap} for {group} (order {order}); raise the cap explicitly to proceed")]
    CapExceeded {
        group: Group,
        n: usize,
        cap: usize,
        order: u128,
    },
    #[error("generator set {kind} is incompatible with {group}")]
    IncompatibleSet { kind: GenSetKind, group: Group },
    #[error("generator set does not generate the group: {element} unreached")]
    DoesNotGenerate { element: String },
    #[error("degree must be at least 1, got {0}")]
    BadDegree(usize),
    #[error(transparent)]
    GenSet(#[from] GenSetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Symmetric,
    Alternating,
}

impl Group {
    pub fn default_cap(&self) -> usize {
        match self {
            Group::Symmetric => DEFAULT_CAP_SYMMETRIC,
            Group::Alternating => DEFAULT_CAP_ALTERNATING,
        }
    }

    pub fn order(&self, n: usize) -> u128 {
        let full: u128 = (1..=n as u128).product();
        match self {
            Group::Symmetric => full,
            Group::Alternating => {
                if n < 2 {
                    full
                } else {
                    full / 2
                }
            }
        }
    }
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Group::Symmetric => f.write_str("S_n"),
            Group::Alternating => f.write_str("A_n"),
        }
    }
}

fn factorial_usize(n: usize) -> usize {
    (1..=n).product()
}

/// Lexicographic rank of the one-line form among all `n!` arrangements.
pub fn lehmer_rank(v: &Permutation) -> usize {
    let images = v.images();
    let n = images.len();
    let mut rank = 0usize;
    let mut factor = 1usize;
    for i in (0..n).rev() {
        let smaller_later = images[i + 1..].iter().filter(|&&x| x < images[i]).count();
        rank += smaller_later * factor;
        factor *= n - i;
    }
    rank
}

/// Inverse of [`lehmer_rank`].
pub fn lehmer_unrank(n: usize, mut rank: usize) -> Permutation {
    let mut factorials = vec![1usize; n];
    for d in 1..n {
        factorials[d] = factorials[d - 1] * d;
    }
    let mut available: Vec<usize> = (1..=n).collect();
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let factor = factorials[n - 1 - i];
        images.push(available.remove(rank / factor));
        rank %= factor;
    }
    Permutation::from_images(images).expect("unrank builds a valid permutation")
}

fn check_cap(group: Group, n: usize, cap: Option<usize>) -> Result<(), OracleError> {
    if n < 1 {
        return Err(OracleError::BadDegree(n));
    }
    let cap = cap.unwrap_or_else(|| group.default_cap());
    if n > cap {
        return Err(OracleError::CapExceeded {
            group,
            n,
            cap,
            order: group.order(n.min(34)),
        });
    }
    Ok(())
}

/// All elements of `S_n` or `A_n` in lexicographic one-line order.
pub fn enumerate_group(
    group: Group,
    n: usize,
    cap: Option<usize>,
) -> Result<Vec<Permutation>, OracleError> {
    check_cap(group, n, cap)?;
    let total = factorial_usize(n);
    let mut out = Vec::with_capacity(match group {
        Group::Symmetric => total,
        Group::Alternating => total.div_ceil(2),
    });
    for rank in 0..total {
        let p = lehmer_unrank(n, rank);
        if group == Group::Symmetric || p.is_even() {
            out.push(p);
        }
    }
    Ok(out)
}

/// Exact geodesic distances from the identity over one generating set.
#[derive(Debug, Clone)]
pub struct Census {
    group: Group,
    kind: GenSetKind,
    n: usize,
    symmetric_closure: bool,
    distances: Vec<u8>,
    histogram: Vec<u64>,
}

impl Census {
    pub fn group(&self) -> Group {
        self.group
    }

    pub fn kind(&self) -> GenSetKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Whether inverses were adjoined before the search (always true for
    /// the Mitsuhashi set).
    pub fn symmetric_closure(&self) -> bool {
        self.symmetric_closure
    }

    /// Geodesic distance of a group member; `None` for permutations
    /// outside the censused group.
    pub fn distance(&self, v: &Permutation) -> Option<usize> {
        if v.degree() != self.n {
            return None;
        }
        match self.distances[lehmer_rank(v)] {
            UNREACHED => None,
            d => Some(d as usize),
        }
    }

    /// Count of elements per distance.
    pub fn histogram(&self) -> &[u64] {
        &self.histogram
    }

    pub fn max_distance(&self) -> usize {
        self.histogram.len() - 1
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.to_string(),
            "set": self.kind.cli_name(),
            "n": self.n,
            "symmetric_closure": self.symmetric_closure,
            "histogram": self.histogram,
        })
    }
}

/// Runs a breadth-first search over the Cayley graph of the group with the
/// chosen generating set and returns the full distance census.
///
/// The Mitsuhashi set is always symmetrized (its 3-cycle `a_2` is not an
/// involution, and word length equals graph distance only for
/// inverse-closed sets); the flag is forced for that kind.
pub fn bfs_census(
    group: Group,
    n: usize,
    kind: GenSetKind,
    symmetric_closure: bool,
    cap: Option<usize>,
) -> Result<Census, OracleError> {
    if kind.is_alternating() != (group == Group::Alternating) {
        return Err(OracleError::IncompatibleSet { kind, group });
    }
    check_cap(group, n, cap)?;
    let closure = symmetric_closure || kind == GenSetKind::Mitsuhashi;
    let set = gensets::build(kind, n, closure)?;
    let gens: Vec<&Permutation> = set.elements().iter().filter(|g| !g.is_identity()).collect();
    let distances = bfs_distances(n, &gens);

    let mut histogram = Vec::new();
    for v in enumerate_group(group, n, cap)? {
        match distances[lehmer_rank(&v)] {
            UNREACHED => {
                return Err(OracleError::DoesNotGenerate {
                    element: v.to_string(),
                })
            }
            d => {
                let d = d as usize;
                if histogram.len() <= d {
                    histogram.resize(d + 1, 0);
                }
                histogram[d] += 1;
            }
        }
    }
    Ok(Census {
        group,
        kind,
        n,
        symmetric_closure: closure,
        distances,
        histogram,
    })
}

fn bfs_distances(n: usize, gens: &[&Permutation]) -> Vec<u8> {
    let mut distances = vec![UNREACHED; factorial_usize(n)];
    let start = lehmer_rank(&Permutation::identity(n));
    distances[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(rank) = queue.pop_front() {
        let v = lehmer_unrank(n, rank);
        let d = distances[rank];
        for g in gens {
            let w = v.compose(g).expect("equal degrees");
            let w_rank = lehmer_rank(&w);
            if distances[w_rank] == UNREACHED {
                distances[w_rank] = d + 1;
                queue.push_back(w_rank);
            }
        }
    }
    distances
}

fn empirical_moments(census: &Census) -> (BigRational, BigRational) {
    let mut total = BigInt::zero();
    let mut sum = BigInt::zero();
    let mut sum_sq = BigInt::zero();
    for (d, &count) in census.histogram().iter().enumerate() {
        let c = BigInt::from(count);
        total += &c;
        sum += &c * BigInt::from(d);
        sum_sq += &c * BigInt::from(d * d);
    }
    let total = BigRational::from_integer(total);
    let mean = BigRational::from_integer(sum) / &total;
    let mean_sq = BigRational::from_integer(sum_sq) / &total;
    let variance = mean_sq - &mean * &mean;
    (mean, variance)
}

/// Closed-form length statistics versus exhaustive BFS distances:
/// A-transposition lengths and canonical hat lengths on `A_n`, inversions
/// versus the Coxeter search and `n - cyc` versus the all-transposition
/// search on `S_n`, the parity law, the per-length cycle count, and the
/// empirical moments. Degrees run up to `n_max`, clipped at the
/// enumeration caps (defaults when `None`).
pub fn verify_lengths(
    n_max: usize,
    cap_alternating: Option<usize>,
    cap_symmetric: Option<usize>,
) -> VerificationReport {
    let cap_a = cap_alternating.unwrap_or(DEFAULT_CAP_ALTERNATING);
    let cap_s = cap_symmetric.unwrap_or(DEFAULT_CAP_SYMMETRIC);
    let mut report = VerificationReport::new("closed forms vs Cayley-graph BFS");
    let a = tables::a_table(n_max.min(cap_a));

    for n in 3..=n_max.min(cap_a) {
        let census = match bfs_census(
            Group::Alternating,
            n,
            GenSetKind::ATranspositions,
            false,
            Some(cap_a),
        ) {
            Ok(c) => c,
            Err(e) => {
                report.record(format!("BFS A_{n}"), false, e.to_string());
                return report;
            }
        };
        let group = enumerate_group(Group::Alternating, n, Some(cap_a)).expect("within cap");
        let mut closed_ok = true;
        let mut hat_ok = true;
        let mut parity_ok = true;
        let mut cyc_ok = true;
        let mut inverse_ok = true;
        for v in &group {
            let d = census.distance(v).expect("generated");
            if lengths::length_ta(v).expect("even") != d {
                closed_ok = false;
            }
            if crate::canon::canonicalize(v).expect("even").hat_length() != d {
                hat_ok = false;
            }
            if v.same_cycle(1, 2).expect("letters in range") != (d % 2 == 1) {
                parity_ok = false;
            }
            if v.cycle_count() != lengths::m_of(n, d).expect("within support") {
                cyc_ok = false;
            }
            if census.distance(&v.inverse()) != Some(d) {
                inverse_ok = false;
            }
        }
        report.record(
            format!("length_ta = BFS distance on A_{n}"),
            closed_ok,
            format!("{} elements", group.len()),
        );
        report.record(
            format!("hat length = BFS distance on A_{n}"),
            hat_ok,
            String::new(),
        );
        report.record(
            format!("1,2 share a cycle iff distance odd on A_{n}"),
            parity_ok,
            String::new(),
        );
        report.record(
            format!("cycle count = m(n, distance) on A_{n}"),
            cyc_ok,
            String::new(),
        );
        report.record(
            format!("distance invariant under inversion on A_{n}"),
            inverse_ok,
            String::new(),
        );

        let expected: Vec<BigInt> = census
            .histogram()
            .iter()
            .map(|&c| BigInt::from(c))
            .collect();
        report.record(
            format!("BFS histogram = a-table row {n}"),
            expected == a.row_support(n),
            format!("{:?}", census.histogram()),
        );
        report.record(
            format!("max distance = n-2 on A_{n}"),
            census.max_distance() == n - 2,
            String::new(),
        );

        let (mean, variance) = empirical_moments(&census);
        let moments_ok = mean == crate::stats::expectation_closed(n).expect("n >= 2")
            && variance == crate::stats::variance_closed(n).expect("n >= 2");
        report.record(
            format!("empirical moments = closed forms on A_{n}"),
            moments_ok,
            format!("E = {mean}, Var = {variance}"),
        );
    }

    for n in 2..=n_max.min(cap_s) {
        let coxeter = match bfs_census(Group::Symmetric, n, GenSetKind::Coxeter, false, Some(cap_s))
        {
            Ok(c) => c,
            Err(e) => {
                report.record(format!("BFS S_{n} coxeter"), false, e.to_string());
                return report;
            }
        };
        let transpositions = match bfs_census(
            Group::Symmetric,
            n,
            GenSetKind::Transpositions,
            false,
            Some(cap_s),
        ) {
            Ok(c) => c,
            Err(e) => {
                report.record(format!("BFS S_{n} transpositions"), false, e.to_string());
                return report;
            }
        };
        let group = enumerate_group(Group::Symmetric, n, Some(cap_s)).expect("within cap");
        let inv_ok = group
            .iter()
            .all(|v| coxeter.distance(v) == Some(lengths::inv_count(v)));
        let cyc_ok = group
            .iter()
            .all(|v| transpositions.distance(v) == Some(lengths::length_t(v)));
        report.record(
            format!("inversions = Coxeter BFS distance on S_{n}"),
            inv_ok,
            format!("{} elements", group.len()),
        );
        report.record(
            format!("n - cyc = transposition BFS distance on S_{n}"),
            cyc_ok,
            String::new(),
        );
    }
    report
}

/// BFS histograms over the symmetrized Mitsuhashi generators versus the
/// product generating function, for `3 <= m <= n_max` within the cap.
pub fn verify_rr(n_max: usize, cap_alternating: Option<usize>) -> VerificationReport {
    let cap = cap_alternating.unwrap_or(DEFAULT_CAP_ALTERNATING);
    let mut report = VerificationReport::new("Mitsuhashi length distribution");
    for m in 3..=n_max.min(cap) {
        let census = match bfs_census(
            Group::Alternating,
            m,
            GenSetKind::Mitsuhashi,
            true,
            Some(cap),
        ) {
            Ok(c) => c,
            Err(e) => {
                report.record(format!("BFS A_{m} mitsuhashi"), false, e.to_string());
                return report;
            }
        };
        let expected = tables::genfunc_rr(m).expect("m >= 2");
        let got: Vec<BigInt> = census
            .histogram()
            .iter()
            .map(|&c| BigInt::from(c))
            .collect();
        report.record(
            format!("histogram = product coefficients on A_{m}"),
            got == expected.coeffs(),
            format!("{:?}", census.histogram()),
        );
    }
    report
}

/// Aggregates every closed-form-versus-search comparison at the default
/// caps.
pub fn cross_check(n_max: usize) -> VerificationReport {
    let mut report = verify_lengths(n_max, None, None);
    report.merge(verify_rr(n_max, None));
    report.title = "oracle cross-check".into();
    report
}
