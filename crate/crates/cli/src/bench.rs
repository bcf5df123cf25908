//! Reproduction of the two reference result tables, with local timings.
//!
//! The expected values are fixed: table 1 is the nth prime at four indices,
//! table 2 the next prime after each power of ten from 10^8 to 10^13. Rows
//! run single-threaded so the reported timings stay comparable.

use std::time::Instant;

use primeform_core::locate::{self, GateVariant};

use crate::report::{BenchReport, BenchRow, TableId};

/// Table 1: `(n, nth prime)`.
pub const TABLE1_NTH: &[(u64, u64)] = &[(50, 229), (100, 541), (200, 1223), (250, 1583)];

/// Table 2: `(n, next prime after n)` at n = 10^8 … 10^13.
pub const TABLE2_NEXT: &[(u64, u64)] = &[
    (100_000_000, 100_000_007),
    (1_000_000_000, 1_000_000_007),
    (10_000_000_000, 10_000_000_019),
    (100_000_000_000, 100_000_000_003),
    (1_000_000_000_000, 1_000_000_000_039),
    (10_000_000_000_000, 10_000_000_000_037),
];

/// Which tables a `bench` invocation runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableSelection {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    All,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_secs_f64())
}

/// Runs every table 1 index through the bounded-sum nth prime, once per
/// gate variant.
pub fn bench_table1() -> BenchReport {
    let mut rows = Vec::new();
    for &(n, expected) in TABLE1_NTH {
        for variant in [GateVariant::A, GateVariant::B] {
            let (got, elapsed_seconds) = timed(|| locate::nth_prime(n, variant));
            rows.push(BenchRow {
                input: n,
                expected: Some(expected),
                got,
                method: format!("nth-prime/{variant}"),
                elapsed_seconds,
            });
        }
    }
    BenchReport::new(TableId::Table1, rows)
}

/// Runs every table 2 point through the corrected next-prime scan.
pub fn bench_table2() -> BenchReport {
    let mut rows = Vec::new();
    for &(n, expected) in TABLE2_NEXT {
        let (got, elapsed_seconds) = timed(|| locate::next_prime_scan(n));
        rows.push(BenchRow {
            input: n,
            expected: Some(expected),
            got,
            method: "next-prime/scan".to_string(),
            elapsed_seconds,
        });
    }
    BenchReport::new(TableId::Table2, rows)
}

/// The selected table reports, in table order.
pub fn bench_tables(selection: TableSelection) -> Vec<BenchReport> {
    match selection {
        TableSelection::One => vec![bench_table1()],
        TableSelection::Two => vec![bench_table2()],
        TableSelection::All => vec![bench_table1(), bench_table2()],
    }
}
