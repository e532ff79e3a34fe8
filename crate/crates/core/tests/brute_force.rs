//! Independent enumeration oracles for the counting tables.
//!
//! Stirling-type entries are recomputed here by exhaustive listing —
//! permutations filtered by cycle structure, set partitions generated as
//! restricted growth strings — and compared against the recurrences. The
//! enumerators never touch the table code.

use num_bigint::BigInt;

use altgen::lengths;
use altgen::oracle::{enumerate_group, Group};
use altgen::tables;

/// Permutations of `n` letters with `k` cycles in which the letters
/// `1..=r` lie in pairwise distinct cycles.
fn count_restricted_cycle_perms(n: usize, k: usize, r: usize) -> u64 {
    enumerate_group(Group::Symmetric, n, None)
        .unwrap()
        .iter()
        .filter(|v| v.cycle_count() == k)
        .filter(|v| (1..=r).all(|a| (a + 1..=r).all(|b| !v.same_cycle(a, b).unwrap())))
        .count() as u64
}

/// Partitions of `{1..=n}` into `k` blocks with the letters `1..=r` in
/// pairwise distinct blocks, generated as restricted growth strings.
fn count_restricted_partitions(n: usize, k: usize, r: usize) -> u64 {
    fn walk(rgs: &mut Vec<usize>, blocks: usize, n: usize, k: usize, r: usize, count: &mut u64) {
        if rgs.len() == n {
            if blocks == k {
                *count += 1;
            }
            return;
        }
        let position = rgs.len(); // 0-based: letter position+1
        for block in 0..=blocks.min(k.saturating_sub(1)) {
            // Letters 1..=r must open distinct blocks.
            if position < r && rgs[..position].contains(&block) {
                continue;
            }
            rgs.push(block);
            walk(rgs, blocks.max(block + 1), n, k, r, count);
            rgs.pop();
        }
    }
    let mut count = 0;
    if n == 0 {
        return u64::from(k == 0);
    }
    walk(&mut Vec::with_capacity(n), 0, n, k, r, &mut count);
    count
}

#[test]
fn spot_values_from_enumeration() {
    assert_eq!(count_restricted_cycle_perms(4, 2, 1), 11); // c(4,2)
    assert_eq!(count_restricted_cycle_perms(3, 2, 2), 2); // [3,2]_2: (13)(2), (23)(1)
    assert_eq!(count_restricted_cycle_perms(4, 2, 2), 6); // [4,2]_2
    assert_eq!(count_restricted_cycle_perms(4, 3, 2), 5); // [4,3]_2
    assert_eq!(count_restricted_partitions(4, 2, 1), 7); // S(4,2)
    assert_eq!(count_restricted_partitions(3, 2, 2), 2); // {13}{2}, {1}{23}
}

#[test]
fn first_kind_tables_match_enumeration() {
    for r in 1..=3usize {
        let table = tables::rstirling1(6, r);
        for n in r..=6 {
            for k in 0..=n {
                assert_eq!(
                    table.get(n, k as i64),
                    BigInt::from(count_restricted_cycle_perms(n, k, r)),
                    "[{n},{k}]_{r}"
                );
            }
        }
    }
    let classical = tables::stirling1_unsigned(6);
    for n in 1..=6 {
        for k in 0..=n {
            assert_eq!(
                classical.get(n, k as i64),
                BigInt::from(count_restricted_cycle_perms(n, k, 1)),
                "c({n},{k})"
            );
        }
    }
}

#[test]
fn second_kind_tables_match_enumeration() {
    for r in 1..=3usize {
        let table = tables::rstirling2(7, r);
        for n in r..=7 {
            for k in 0..=n {
                assert_eq!(
                    table.get(n, k as i64),
                    BigInt::from(count_restricted_partitions(n, k, r)),
                    "{{{n},{k}}}_{r}"
                );
            }
        }
    }
    let classical = tables::stirling2(7);
    for n in 1..=7 {
        for k in 0..=n {
            assert_eq!(
                classical.get(n, k as i64),
                BigInt::from(count_restricted_partitions(n, k, 1)),
                "S({n},{k})"
            );
        }
    }
}

#[test]
fn a_table_matches_closed_form_census() {
    // Row n of the a-table counted directly from the closed-form length.
    for n in 2..=7 {
        let a = tables::a_table(n);
        let mut counts = vec![0u64; n.max(2) - 1];
        for v in enumerate_group(Group::Alternating, n, None).unwrap() {
            counts[lengths::length_ta(&v).unwrap()] += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        let expected: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
        assert_eq!(a.row_support(n), expected, "row {n}");
    }
}

#[test]
fn hat_length_equals_closed_form_up_to_a8() {
    for n in 3..=8 {
        for v in enumerate_group(Group::Alternating, n, None).unwrap() {
            let p = altgen::canon::canonicalize(&v).unwrap();
            assert_eq!(p.hat_length(), lengths::length_ta(&v).unwrap());
        }
    }
}
