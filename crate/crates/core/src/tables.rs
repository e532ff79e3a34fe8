//! Exact integer triangles and their generating functions.
//!
//! * `a_table` — `a(n, m)`, the number of elements of `A_n` whose
//!   A-transposition length is `m`, via the Stirling-type recurrence
//!   `a(n, m) = (n-1)·a(n-1, m-1) + a(n-1, m)` on the support
//!   `0 <= m <= n-2`, with `a(n, 0) = 1`.
//! * `stirling1_unsigned` / `stirling2` — the classical triangles.
//! * `rstirling1` / `rstirling2` — the r-restricted variants: permutations
//!   (partitions) in which the letters `1..=r` occupy distinct cycles
//!   (blocks).
//! * Product generating functions for each, plus the length generating
//!   function over the Mitsuhashi generators.
//! * Verified identities tying them together: `c(n, n-k) = a(n, k) +
//!   a(n, k-1)`, `a(n, k) = [n, n-k]_2`, `c(n, k) = [n, k]_2 + [n, k+1]_2`,
//!   and the first/second-kind orthogonality relation.
//!
//! Out-of-support lookups return 0 (including `k = -1`), so identities can
//! be asserted uniformly at the boundaries.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::poly::IntPolynomial;
use crate::report::VerificationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),
}

/// A two-index triangle of arbitrary-precision integers. Row `n` stores
/// entries for `0 <= k <= n`; the support of a row is everything up to its
/// last nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    name: String,
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    fn from_rows(name: impl Into<String>, rows: Vec<Vec<BigInt>>) -> Triangle {
        Triangle {
            name: name.into(),
            rows,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry at `(n, k)`, zero outside the stored triangle (negative `k`
    /// included).
    pub fn get(&self, n: usize, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.rows
            .get(n)
            .and_then(|row| row.get(k as usize))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Full row `0..=n`.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    /// Row with trailing zeros trimmed (empty for an all-zero row).
    pub fn row_support(&self, n: usize) -> &[BigInt] {
        let row = &self.rows[n];
        let mut end = row.len();
        while end > 0 && row[end - 1].is_zero() {
            end -= 1;
        }
        &row[..end]
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.rows[n].iter().sum()
    }

    /// CSV with header `n,k,value`, rows in lexicographic `(n, k)` order,
    /// each row emitted through its last nonzero entry (all-zero rows
    /// contribute a single `n,0,0` line).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for n in 0..=self.n_max() {
            let support = self.row_support(n);
            if support.is_empty() {
                out.push_str(&format!("{n},0,0\n"));
                continue;
            }
            for (k, value) in support.iter().enumerate() {
                out.push_str(&format!("{n},{k},{value}\n"));
            }
        }
        out
    }

    /// JSON `{"name": .., "rows": [[..]]}` with entries as decimal strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = (0..=self.n_max())
            .map(|n| self.row_support(n).iter().map(|v| v.to_string()).collect())
            .collect();
        json!({ "name": self.name, "rows": rows })
    }
}

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * big(i))
}

/// `a(n, m)` for all `n <= n_max`.
pub fn a_table(n_max: usize) -> Triangle {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        row[0] = BigInt::one();
        if n >= 2 {
            for m in 1..=n - 2 {
                let prev = &rows[n - 1];
                row[m] = big(n - 1) * &prev[m - 1] + &prev[m];
            }
        }
        rows.push(row);
    }
    Triangle::from_rows("a", rows)
}

/// Unsigned Stirling numbers of the first kind `c(n, k)`.
pub fn stirling1_unsigned(n_max: usize) -> Triangle {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let prev = &rows[n - 1];
            let carry = if k < n {
                big(n - 1) * &prev[k]
            } else {
                BigInt::zero()
            };
            row[k] = carry + &prev[k - 1];
        }
        rows.push(row);
    }
    Triangle::from_rows("stirling1", rows)
}

/// Stirling numbers of the second kind `S(n, k)`.
pub fn stirling2(n_max: usize) -> Triangle {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let prev = &rows[n - 1];
            let carry = if k < n {
                big(k) * &prev[k]
            } else {
                BigInt::zero()
            };
            row[k] = carry + &prev[k - 1];
        }
        rows.push(row);
    }
    Triangle::from_rows("stirling2", rows)
}

/// r-restricted Stirling numbers of the first kind `[n, k]_r`:
/// permutations of `n` letters with `k` cycles, the letters `1..=r` in
/// distinct cycles. Zero whenever `k < r` or `n < k`; in particular the
/// rows with `n < r` vanish entirely.
pub fn rstirling1(n_max: usize, r: usize) -> Triangle {
    assert!(r >= 1, "restriction parameter must be at least 1");
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        if n >= r {
            for k in r..=n {
                row[k] = if k == n {
                    BigInt::one()
                } else if k == r {
                    factorial(n - 1) / factorial(r - 1)
                } else {
                    let prev = &rows[n - 1];
                    big(n - 1) * &prev[k] + &prev[k - 1]
                };
            }
        }
        rows.push(row);
    }
    Triangle::from_rows(format!("rstirling1(r={r})"), rows)
}

/// r-restricted Stirling numbers of the second kind `{n, k}_r`:
/// partitions of `n` letters into `k` blocks, the letters `1..=r` in
/// distinct blocks. `{n, r}_r = r^(n-r)`.
pub fn rstirling2(n_max: usize, r: usize) -> Triangle {
    assert!(r >= 1, "restriction parameter must be at least 1");
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        if n >= r {
            for k in r..=n {
                row[k] = if k == n {
                    BigInt::one()
                } else if k == r {
                    big(r).pow((n - r) as u32)
                } else {
                    let prev = &rows[n - 1];
                    big(k) * &prev[k] + &prev[k - 1]
                };
            }
        }
        rows.push(row);
    }
    Triangle::from_rows(format!("rstirling2(r={r})"), rows)
}

/// Length generating function of `A_n` over the A-transpositions:
/// `Π_{t=2}^{n-1} (1 + t·x)`, whose coefficients are row `n` of `a_table`.
/// The product is empty for `n = 2`.
pub fn genfunc_a(n: usize) -> Result<IntPolynomial, TableError> {
    if n < 2 {
        return Err(TableError::DegreeTooSmall(n));
    }
    Ok(IntPolynomial::product((2..n).map(|t| {
        IntPolynomial::from_coeffs(vec![BigInt::one(), big(t)])
    })))
}

/// Generating function of the first-kind r-restricted numbers:
/// `x^r (x+r)(x+r+1)···(x+n-1)` when `1 <= r <= n`, zero otherwise.
pub fn genfunc_rstirling1(n: usize, r: usize) -> IntPolynomial {
    if r < 1 || r > n {
        return IntPolynomial::zero();
    }
    IntPolynomial::product((r..n).map(|t| IntPolynomial::from_coeffs(vec![big(t), BigInt::one()])))
        .shift(r)
}

/// First `n_terms` coefficients of the power series
/// `x^k / ((1-rx)(1-(r+1)x)···(1-kx))`, the column generating function of
/// the second-kind r-restricted numbers: coefficient `n` equals
/// `{n, k}_r`. All zero when `r > k`.
pub fn genfunc_rstirling2_check(k: usize, r: usize, n_terms: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); n_terms];
    if r < 1 || r > k {
        return coeffs;
    }
    // Denominator (1-rx)···(1-kx); the series satisfies the linear
    // recurrence Σ_i d_i·c_{m-i} = [m == k] with d_0 = 1.
    let denom = IntPolynomial::product(
        (r..=k).map(|j| IntPolynomial::from_coeffs(vec![BigInt::one(), -big(j)])),
    );
    for m in 0..n_terms {
        let mut acc = if m == k {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        for i in 1..=m.min(denom.degree().unwrap_or(0)) {
            acc -= denom.coeff(i) * &coeffs[m - i];
        }
        coeffs[m] = acc;
    }
    coeffs
}

/// Length generating function of `A_m` over the symmetrized Mitsuhashi
/// generators: `Π_{j=1}^{m-2} (1 + q + ... + q^(j-1) + 2q^j)`. The product
/// is empty for `m = 2`.
pub fn genfunc_rr(m: usize) -> Result<IntPolynomial, TableError> {
    if m < 2 {
        return Err(TableError::DegreeTooSmall(m));
    }
    Ok(IntPolynomial::product((1..=m - 2).map(|j| {
        let mut coeffs = vec![BigInt::one(); j + 1];
        coeffs[j] = big(2);
        IntPolynomial::from_coeffs(coeffs)
    })))
}

/// Checks `c(n, n-k) = a(n, k) + a(n, k-1)` for `2 <= n <= n_max` and
/// `0 <= k <= n`, both parities of `k`.
pub fn identity_eq4(n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("c(n,n-k) = a(n,k) + a(n,k-1)");
    let a = a_table(n_max);
    let c = stirling1_unsigned(n_max);
    let mut checked = 0usize;
    for n in 2..=n_max {
        for k in 0..=n {
            let lhs = c.get(n, (n - k) as i64);
            let rhs = a.get(n, k as i64) + a.get(n, k as i64 - 1);
            if lhs != rhs {
                report.record(
                    format!("n={n}, k={k}"),
                    false,
                    format!("c(n,n-k)={lhs} but a(n,k)+a(n,k-1)={rhs}"),
                );
                return report;
            }
            checked += 1;
        }
    }
    report.record(
        format!("all n <= {n_max}"),
        true,
        format!("{checked} pairs checked, both parities"),
    );
    report
}

/// Checks `a(n, k) = [n, n-k]_2` for `0 <= k <= n-2` and
/// `c(n, k) = [n, k]_2 + [n, k+1]_2` for `0 <= k <= n`, all
/// `2 <= n <= n_max`.
pub fn identity_thm9(n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("2-restricted Stirling identities");
    let a = a_table(n_max);
    let c = stirling1_unsigned(n_max);
    let r2 = rstirling1(n_max + 1, 2);
    let mut checked = 0usize;
    for n in 2..=n_max {
        for k in 0..=n - 2 {
            let lhs = a.get(n, k as i64);
            let rhs = r2.get(n, (n - k) as i64);
            if lhs != rhs {
                report.record(
                    format!("a(n,k) vs [n,n-k]_2 at n={n}, k={k}"),
                    false,
                    format!("a={lhs}, restricted={rhs}"),
                );
                return report;
            }
            checked += 1;
        }
        for k in 0..=n {
            let lhs = c.get(n, k as i64);
            let rhs = r2.get(n, k as i64) + r2.get(n, k as i64 + 1);
            if lhs != rhs {
                report.record(
                    format!("c(n,k) vs [n,k]_2+[n,k+1]_2 at n={n}, k={k}"),
                    false,
                    format!("c={lhs}, sum={rhs}"),
                );
                return report;
            }
            checked += 1;
        }
    }
    report.record(
        format!("all n <= {n_max}"),
        true,
        format!("{checked} identities checked"),
    );
    report
}

/// Checks `Σ_k [n,k]_r {k,m}_r (-1)^k = (-1)^n δ_{m,n}` for
/// `r <= m <= n <= n_max`.
pub fn orthogonality(n_max: usize, r: usize) -> VerificationReport {
    let mut report = VerificationReport::new(format!("orthogonality (r={r})"));
    let first = rstirling1(n_max, r);
    let second = rstirling2(n_max, r);
    let mut checked = 0usize;
    for n in r..=n_max {
        for m in r..=n {
            let mut sum = BigInt::zero();
            for k in 0..=n {
                let term = first.get(n, k as i64) * second.get(k, m as i64);
                if k % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            let expected = if m == n {
                if n % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                }
            } else {
                BigInt::zero()
            };
            if sum != expected {
                report.record(
                    format!("n={n}, m={m}"),
                    false,
                    format!("sum={sum}, expected {expected}"),
                );
                return report;
            }
            checked += 1;
        }
    }
    report.record(
        format!("all r <= m <= n <= {n_max}"),
        true,
        format!("{checked} sums checked"),
    );
    report
}

/// Exact agreement of every table with its generating function, plus the
/// degeneration of the restricted triangles at `r = 1`.
pub fn verify_tables(n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("table identities");
    let a = a_table(n_max);
    let ok = (2..=n_max).all(|n| genfunc_a(n).expect("n >= 2").coeffs() == a.row_support(n));
    report.record(
        "a-table rows = product coefficients",
        ok,
        format!("n <= {n_max}"),
    );

    let mut rows_ok = true;
    for r in 1..=3.min(n_max) {
        let table = rstirling1(n_max, r);
        for n in r..=n_max {
            if genfunc_rstirling1(n, r).coeffs() != table.row_support(n) {
                rows_ok = false;
            }
        }
    }
    report.record(
        "restricted first-kind rows = product coefficients",
        rows_ok,
        format!("r in 1..=3, n <= {n_max}"),
    );

    let classical1 = stirling1_unsigned(n_max);
    let r1 = rstirling1(n_max, 1);
    let classical2 = stirling2(n_max);
    let s1 = rstirling2(n_max, 1);
    let degenerate =
        (1..=n_max).all(|n| classical1.row(n) == r1.row(n) && classical2.row(n) == s1.row(n));
    report.record(
        "r=1 restriction is classical",
        degenerate,
        format!("n in 1..={n_max}"),
    );

    let series_ok = (1..=3.min(n_max)).all(|r| {
        (r..=6.min(n_max)).all(|k| {
            let series = genfunc_rstirling2_check(k, r, n_max + 1);
            let table = rstirling2(n_max, r);
            (0..=n_max).all(|n| series[n] == table.get(n, k as i64))
        })
    });
    report.record(
        "second-kind column series = table columns",
        series_ok,
        format!("r in 1..=3, k <= 6, n <= {n_max}"),
    );

    let half_factorials = (2..=n_max).all(|n| a.row_sum(n) * big(2) == factorial(n));
    report.record(
        "a-table row sums = n!/2",
        half_factorials,
        format!("n in 2..={n_max}"),
    );
    let full_factorials = (0..=n_max).all(|n| classical1.row_sum(n) == factorial(n));
    report.record(
        "first-kind row sums = n!",
        full_factorials,
        format!("n <= {n_max}"),
    );

    let support_ok =
        (2..=n_max).all(|n| (0..=n).all(|k| (k + 2 <= n) == (a.get(n, k as i64) > BigInt::zero())));
    report.record(
        "a(n,k) > 0 exactly on 0..=n-2",
        support_ok,
        format!("n <= {n_max}"),
    );

    report.merge(identity_eq4(n_max));
    report.merge(identity_thm9(n_max));
    for r in 1..=3 {
        report.merge(orthogonality(n_max.min(15), r));
    }
    report
}
