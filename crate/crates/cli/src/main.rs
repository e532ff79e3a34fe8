//! `altgen`: exact tables, lengths, factorizations, moments and
//! brute-force verification for alternating-group generating sets.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on
//! usage errors. All numeric output is exact unless `--float` is given.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use altgen::bijection;
use altgen::canon;
use altgen::lengths;
use altgen::oracle;
use altgen::perm::Permutation;
use altgen::poly::IntPolynomial;
use altgen::report::VerificationReport;
use altgen::stats;
use altgen::tables::{self, Triangle};

#[derive(Parser)]
#[command(
    name = "altgen",
    version,
    about = "Exact combinatorics of generating sets for the alternating group",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// Elements of A_n counted by word length over the A-transpositions
    A,
}

#[derive(Clone, Copy, ValueEnum)]
enum StirlingKind {
    /// (Unsigned) Stirling numbers of the first kind: cycles
    First,
    /// Stirling numbers of the second kind: set partitions
    Second,
}

#[derive(Clone, Copy, ValueEnum)]
enum LengthSet {
    Coxeter,
    Transpositions,
    ATranspositions,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Suite {
    Lengths,
    Tables,
    Canon,
    Bijection,
    Rr,
    #[default]
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenfuncKind {
    /// Product (1+2x)(1+3x)...(1+(n-1)x): lengths over A-transpositions
    A,
    /// Product for lengths over the symmetrized Mitsuhashi generators
    Rr,
    /// Product x^r (x+r)...(x+n-1): restricted first kind, row n
    Rstirling1,
    /// Series x^k / ((1-rx)...(1-kx)): restricted second kind, column k
    Rstirling2,
}

#[derive(Subcommand)]
enum Command {
    /// Print an exact counting triangle up to a given row
    Table {
        kind: TableKind,
        /// Largest row to print
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a classical or r-restricted Stirling triangle
    Stirling {
        #[arg(long, value_enum)]
        kind: StirlingKind,
        /// Largest row to print
        #[arg(long)]
        n: usize,
        /// Restriction: letters 1..=r in distinct cycles/blocks (1 = classical)
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Closed-form word length of one permutation
    Length {
        /// Generating set the length is measured against
        #[arg(long, value_enum)]
        set: LengthSet,
        /// Permutation, in cycle notation "(1 3)(2 4)" or one-line "3 4 1 2"
        perm: String,
        /// Degree, when cycle notation should not infer it from the largest letter
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Canonical layer factorization v = v_3 v_4 ... v_n of an even permutation
    Canon {
        /// Permutation, in cycle notation or one-line notation
        perm: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exact expectation and variance of the word length on A_n
    Stats {
        /// Single degree to report
        #[arg(long, conflicts_with = "max_n")]
        n: Option<usize>,
        /// Report every degree from 2 through this bound
        #[arg(long)]
        max_n: Option<usize>,
        /// Append decimal approximations to the exact values
        #[arg(long)]
        float: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify the length-class bijection at one degree
    Bijection {
        #[arg(long)]
        n: usize,
    },
    /// Cross-verify closed forms, tables and factorizations against brute force
    Verify {
        #[arg(long, value_enum, default_value_t)]
        suite: Suite,
        /// Largest degree for the exhaustive suites
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Raise the enumeration cap for A_n (default 9)
        #[arg(long)]
        cap_alternating: Option<usize>,
        /// Raise the enumeration cap for S_n (default 8)
        #[arg(long)]
        cap_symmetric: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Expand a generating function
    Genfunc {
        which: GenfuncKind,
        /// Row / degree parameter
        #[arg(long)]
        n: Option<usize>,
        /// Restriction parameter for the restricted kinds
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Column parameter (rstirling2 only)
        #[arg(long)]
        k: Option<usize>,
        /// Number of series coefficients (rstirling2 only)
        #[arg(long)]
        terms: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Table { kind, n, format } => {
            let triangle = match kind {
                TableKind::A => tables::a_table(n),
            };
            print_triangle(&triangle, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Stirling { kind, n, r, format } => {
            if r < 1 {
                bail!("the restriction parameter must be at least 1");
            }
            let triangle = match (kind, r) {
                (StirlingKind::First, 1) => tables::stirling1_unsigned(n),
                (StirlingKind::Second, 1) => tables::stirling2(n),
                (StirlingKind::First, r) => tables::rstirling1(n, r),
                (StirlingKind::Second, r) => tables::rstirling2(n, r),
            };
            print_triangle(&triangle, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Length { set, perm, degree } => {
            let v = Permutation::parse(&perm, degree)
                .with_context(|| format!("invalid permutation {perm:?}"))?;
            let value = match set {
                LengthSet::Coxeter => lengths::inv_count(&v),
                LengthSet::Transpositions => lengths::length_t(&v),
                LengthSet::ATranspositions => lengths::length_ta(&v)?,
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Canon {
            perm,
            degree,
            format,
        } => {
            let v = Permutation::parse(&perm, degree)
                .with_context(|| format!("invalid permutation {perm:?}"))?;
            let p = canon::canonicalize(&v)?;
            match format {
                Format::Text => println!("{p}"),
                Format::Json => println!("{}", p.to_json()),
                Format::Csv => {
                    println!("level,factor");
                    for (idx, code) in p.factors().iter().enumerate() {
                        println!("{},{}", idx + 3, code);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats {
            n,
            max_n,
            float,
            format,
        } => {
            let range = match (n, max_n) {
                (Some(n), None) => n..=n,
                (None, Some(m)) => 2..=m,
                (None, None) => bail!("pass --n or --max-n"),
                (Some(_), Some(_)) => unreachable!("clap forbids the combination"),
            };
            print_stats(range, float, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bijection { n } => {
            let report = bijection::verify_bijection(n)?;
            println!("{report}");
            Ok(exit_for(&report))
        }
        Command::Verify {
            suite,
            max_n,
            cap_alternating,
            cap_symmetric,
            format,
        } => {
            warn_on_raised_cap("A_n", cap_alternating, oracle::DEFAULT_CAP_ALTERNATING);
            warn_on_raised_cap("S_n", cap_symmetric, oracle::DEFAULT_CAP_SYMMETRIC);
            let report = run_suite(suite, max_n, cap_alternating, cap_symmetric)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "suite": suite_name(suite),
                        "passed": report.passed(),
                        "checks": report.checks,
                    })
                ),
                _ => println!("{report}"),
            }
            Ok(exit_for(&report))
        }
        Command::Genfunc {
            which,
            n,
            r,
            k,
            terms,
            format,
        } => {
            let coeffs: Vec<BigInt> = match which {
                GenfuncKind::A => {
                    let n = n.ok_or_else(|| anyhow!("genfunc a needs --n"))?;
                    tables::genfunc_a(n)?.coeffs().to_vec()
                }
                GenfuncKind::Rr => {
                    let n = n.ok_or_else(|| anyhow!("genfunc rr needs --n"))?;
                    tables::genfunc_rr(n)?.coeffs().to_vec()
                }
                GenfuncKind::Rstirling1 => {
                    let n = n.ok_or_else(|| anyhow!("genfunc rstirling1 needs --n"))?;
                    tables::genfunc_rstirling1(n, r).coeffs().to_vec()
                }
                GenfuncKind::Rstirling2 => {
                    let k = k.ok_or_else(|| anyhow!("genfunc rstirling2 needs --k"))?;
                    let terms = terms.ok_or_else(|| anyhow!("genfunc rstirling2 needs --terms"))?;
                    tables::genfunc_rstirling2_check(k, r, terms)
                }
            };
            print_coeffs(&coeffs, format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_for(report: &VerificationReport) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Lengths => "lengths",
        Suite::Tables => "tables",
        Suite::Canon => "canon",
        Suite::Bijection => "bijection",
        Suite::Rr => "rr",
        Suite::All => "all",
    }
}

fn warn_on_raised_cap(group: &str, cap: Option<usize>, default: usize) {
    if let Some(cap) = cap {
        if cap > default {
            let bytes: u128 = (1..=cap.min(34) as u128).product();
            eprintln!(
                "note: cap for {group} raised to {cap}; the distance array alone needs ~{} MiB",
                bytes / (1024 * 1024)
            );
        }
    }
}

fn run_suite(
    suite: Suite,
    max_n: usize,
    cap_a: Option<usize>,
    cap_s: Option<usize>,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("suite {}", suite_name(suite)));
    // Table identities are cheap; always exercise them through n = 30
    // (orthogonality is clipped to 15 internally).
    let table_rows = max_n.max(30);
    if matches!(suite, Suite::Lengths | Suite::All) {
        report.merge(oracle::verify_lengths(max_n, cap_a, cap_s));
    }
    if matches!(suite, Suite::Tables | Suite::All) {
        report.merge(tables::verify_tables(table_rows));
        report.merge(stats::verify_moments(table_rows));
    }
    if matches!(suite, Suite::Canon | Suite::All) {
        let bound = max_n.min(cap_a.unwrap_or(oracle::DEFAULT_CAP_ALTERNATING));
        report.merge(canon::verify_canonical(bound));
        report.merge(canon::verify_rewrite(10_000, 6, 8, 0x00C0FFEE));
    }
    if matches!(suite, Suite::Bijection | Suite::All) {
        let bound = max_n.min(cap_s.unwrap_or(oracle::DEFAULT_CAP_SYMMETRIC));
        for n in 2..=bound {
            report.merge(bijection::verify_bijection(n)?);
        }
    }
    if matches!(suite, Suite::Rr | Suite::All) {
        report.merge(oracle::verify_rr(max_n, cap_a));
    }
    Ok(report)
}

fn print_triangle(triangle: &Triangle, format: Format) {
    match format {
        Format::Csv => print!("{}", triangle.to_csv()),
        Format::Json => println!("{}", triangle.to_json()),
        Format::Text => {
            println!(
                "{}(n, k) for 0 <= n <= {}",
                triangle.name(),
                triangle.n_max()
            );
            for n in 0..=triangle.n_max() {
                let row = triangle
                    .row_support(n)
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                println!("{n}: {}", if row.is_empty() { "0".into() } else { row });
            }
        }
    }
}

fn print_coeffs(coeffs: &[BigInt], format: Format) {
    match format {
        Format::Text => {
            println!("{}", IntPolynomial::from_coeffs(coeffs.to_vec()));
        }
        Format::Csv => {
            println!("k,coefficient");
            for (k, c) in coeffs.iter().enumerate() {
                println!("{k},{c}");
            }
        }
        Format::Json => {
            let strings: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
            println!("{}", serde_json::json!({ "coefficients": strings }));
        }
    }
}

fn print_stats(range: std::ops::RangeInclusive<usize>, float: bool, format: Format) -> Result<()> {
    if format == Format::Csv {
        if float {
            println!("n,expectation,variance,expectation_float,variance_float");
        } else {
            println!("n,expectation,variance");
        }
    }
    let mut json_rows = Vec::new();
    for n in range {
        let e = stats::expectation_closed(n)?;
        let var = stats::variance_closed(n)?;
        match format {
            Format::Text => {
                if float {
                    println!(
                        "n={n}: E = {e} ({:.6}), Var = {var} ({:.6})",
                        stats::to_f64(&e),
                        stats::to_f64(&var)
                    );
                } else {
                    println!("n={n}: E = {e}, Var = {var}");
                }
            }
            Format::Csv => {
                if float {
                    println!(
                        "{n},{e},{var},{:.6},{:.6}",
                        stats::to_f64(&e),
                        stats::to_f64(&var)
                    );
                } else {
                    println!("{n},{e},{var}");
                }
            }
            Format::Json => {
                json_rows.push(serde_json::json!({
                    "n": n,
                    "expectation": e.to_string(),
                    "variance": var.to_string(),
                }));
            }
        }
    }
    if format == Format::Json {
        println!("{}", serde_json::json!({ "rows": json_rows }));
    }
    Ok(())
}
