//! Cross-method verification sweeps, exposed as `verify --suite <name>`.
//!
//! Each suite drives a formula against an algorithmically unrelated route
//! to the same answer over `[.., max]` and reports two summary rows (points
//! checked, points failed) plus one row per failure. The paper-scan suite
//! additionally lists every divergence of the characterized scan, checking
//! the observed set against its predictive model rather than expecting
//! zero divergences.

use std::time::Instant;

use primeform_core::count;
use primeform_core::exact::ExactRatio;
use primeform_core::locate::{self, GateVariant};
use primeform_core::oracle;
use primeform_core::stest;
use primeform_core::Result;

use crate::report::{BenchReport, BenchRow, TableId};

/// The available verification sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Primality verdicts and indicator range against trial division.
    STest,
    /// Both counting formulas against the sieve, point by point.
    Pi,
    /// Both nth-prime gates against the sieve.
    Nth,
    /// Next-prime formula and scan against trial division.
    Next,
    /// Divergence census of the characterized scan against its model.
    PaperScan,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::STest => "s-test",
            Suite::Pi => "pi",
            Suite::Nth => "nth",
            Suite::Next => "next",
            Suite::PaperScan => "paper-scan",
        }
    }
}

struct SweepLog {
    suite: Suite,
    checked: u64,
    rows: Vec<BenchRow>,
    started: Instant,
}

impl SweepLog {
    fn new(suite: Suite) -> Self {
        SweepLog {
            suite,
            checked: 0,
            rows: Vec::new(),
            started: Instant::now(),
        }
    }

    fn fail(&mut self, input: u64, expected: u64, got: u64, detail: &str) {
        self.rows.push(BenchRow {
            input,
            expected: Some(expected),
            got,
            method: format!("{}/{detail}", self.suite.name()),
            elapsed_seconds: 0.0,
        });
    }

    fn info(&mut self, input: u64, got: u64, detail: &str) {
        self.rows.push(BenchRow {
            input,
            expected: None,
            got,
            method: format!("{}/{detail}", self.suite.name()),
            elapsed_seconds: 0.0,
        });
    }

    /// Appends the checked/failures summary rows and closes the report.
    fn finish(mut self, max: u64) -> BenchReport {
        let elapsed = self.started.elapsed().as_secs_f64();
        let failures = self
            .rows
            .iter()
            .filter(|r| r.expected.is_some_and(|e| e != r.got))
            .count() as u64;
        let name = self.suite.name();
        self.rows.push(BenchRow {
            input: max,
            expected: None,
            got: self.checked,
            method: format!("{name}:checked"),
            elapsed_seconds: elapsed,
        });
        self.rows.push(BenchRow {
            input: max,
            expected: Some(0),
            got: failures,
            method: format!("{name}:failures"),
            elapsed_seconds: elapsed,
        });
        BenchReport::new(TableId::Custom, self.rows)
    }
}

/// Runs one sweep to `max`. Errors only on resource refusal (a sieve too
/// large for the memory budget); verification failures are reported in the
/// rows, not as errors.
pub fn run_suite(suite: Suite, max: u64) -> Result<BenchReport> {
    match suite {
        Suite::STest => run_s_test(max),
        Suite::Pi => run_pi(max),
        Suite::Nth => run_nth(max),
        Suite::Next => run_next(max),
        Suite::PaperScan => run_paper_scan(max),
    }
}

/// Every x ≤ max: verdict vs trial division; on the certified domain the
/// breakdown must also put s at 1 on primes and inside [0, 1) on
/// composites.
fn run_s_test(max: u64) -> Result<BenchReport> {
    let mut log = SweepLog::new(Suite::STest);
    for x in 0..=max {
        log.checked += 1;
        let claimed = stest::is_prime(x).is_prime();
        let truth = oracle::trial_is_prime(x);
        if claimed != truth {
            log.fail(x, truth.into(), claimed.into(), "is-prime");
            continue;
        }
        if x >= 11 && x % 2 != 0 && x % 3 != 0 {
            let b = stest::s_breakdown(x);
            let certified = b.s == ExactRatio::ONE;
            if certified != truth {
                log.fail(x, truth.into(), certified.into(), "indicator");
            }
            if !truth && (b.s < ExactRatio::ZERO || b.s >= ExactRatio::ONE) {
                log.fail(x, 0, 1, "composite-range");
            }
        }
    }
    Ok(log.finish(max))
}

/// Every x in [7, max]: running evaluations of both counting formulas vs
/// the sieve, plus direct single-point evaluations at sampled x.
fn run_pi(max: u64) -> Result<BenchReport> {
    let mut log = SweepLog::new(Suite::Pi);
    if max < 7 {
        return Ok(log.finish(max));
    }
    let sieve = oracle::build_sieve(max)?;
    let full = count::pi_running(max);
    let mut reduced = count::pi_reduced_running(max);
    for (x, got_full) in full {
        log.checked += 1;
        let truth = sieve.pi(x);
        if got_full != truth {
            log.fail(x, truth, got_full, "full-running");
        }
        let (_, got_reduced) = reduced.next().expect("running evaluators stay in step");
        if got_reduced != truth {
            log.fail(x, truth, got_reduced, "reduced-running");
        }
    }
    // Direct closed-form evaluations at up to 17 points across the range.
    let step = ((max - 7) / 16).max(1);
    let mut x = 7;
    while x <= max {
        let truth = sieve.pi(x);
        let full = count::pi_full(x).expect("x >= 7").count;
        if full != truth {
            log.fail(x, truth, full, "full-direct");
        }
        let red = count::pi_reduced(x).expect("x >= 7").count;
        if red != truth {
            log.fail(x, truth, red, "reduced-direct");
        }
        x += step;
    }
    Ok(log.finish(max))
}

/// Every n in [1, max]: both gates vs the sieve's nth prime.
fn run_nth(max: u64) -> Result<BenchReport> {
    let mut log = SweepLog::new(Suite::Nth);
    if max == 0 {
        return Ok(log.finish(max));
    }
    let bound = oracle_prime_list_bound(max);
    let sieve = oracle::build_sieve(bound)?;
    for n in 1..=max {
        log.checked += 1;
        let truth = sieve.prime_list[n as usize - 1];
        let a = locate::nth_prime(n, GateVariant::A);
        if a != truth {
            log.fail(n, truth, a, "gate-a");
        }
        let b = locate::nth_prime(n, GateVariant::B);
        if b != truth {
            log.fail(n, truth, b, "gate-b");
        }
    }
    Ok(log.finish(max))
}

/// Every n in [1, max]: product-sum formula and corrected scan vs trial
/// division.
fn run_next(max: u64) -> Result<BenchReport> {
    let mut log = SweepLog::new(Suite::Next);
    for n in 1..=max {
        log.checked += 1;
        let truth = oracle::oracle_next(n);
        let scan = locate::next_prime_scan(n);
        if scan != truth {
            log.fail(n, truth, scan, "scan");
        }
        let formula = locate::next_prime_formula(n);
        if formula != truth {
            log.fail(n, truth, formula, "formula");
        }
    }
    Ok(log.finish(max))
}

/// Every n in [5, max]: the characterized scan vs trial division. Each
/// divergence is listed as an informational row; the failure count tracks
/// disagreements with the divergence model, not the divergences themselves.
fn run_paper_scan(max: u64) -> Result<BenchReport> {
    let mut log = SweepLog::new(Suite::PaperScan);
    if max < 5 {
        return Ok(log.finish(max));
    }
    for n in 5..=max {
        log.checked += 1;
        let scanned = locate::next_prime_paper_scan(n);
        let actual = oracle::oracle_next(n);
        let diverged = scanned != actual;
        if diverged {
            log.info(n, scanned, "divergence");
        }
        let predicted = locate::paper_scan_divergence_expected(n);
        if predicted != diverged {
            log.fail(n, predicted.into(), diverged.into(), "model");
        }
    }
    Ok(log.finish(max))
}

/// A sieve limit guaranteed to hold the first `n` primes.
fn oracle_prime_list_bound(n: u64) -> u64 {
    if n < 6 {
        return 12;
    }
    let nf = n as f64;
    (nf * (nf.ln() + nf.ln().ln())).ceil() as u64 + 16
}
