//! Exact combinatorics of generating sets for the alternating group `A_n`.
//!
//! The library is organized around the *A-transpositions*
//! `a_ij = (1 2)(i j)`, a generating set for `A_n` whose word-length
//! statistic admits a closed form, a Stirling-type counting recurrence,
//! a product generating function, and a bijective link to 2-restricted
//! Stirling numbers. Every closed form is cross-checked against an
//! independent brute-force breadth-first search over the Cayley graph
//! at small degrees.
//!
//! All integer arithmetic is arbitrary precision and all moments are
//! exact rationals; floating point never enters a comparison.

pub mod bijection;
pub mod canon;
pub mod gensets;
pub mod lengths;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod report;
pub mod stats;
pub mod tables;

pub use perm::{CycleDecomposition, PermError, Permutation};
pub use poly::IntPolynomial;
pub use report::{Check, VerificationReport};
