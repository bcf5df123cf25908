//! The `primeform` command line: single-value queries against the
//! floor-sum formulas, table reproduction with timings, and cross-method
//! verification sweeps.

pub mod bench;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use primeform_core::locate::{self, GateVariant};
use primeform_core::stest::{Classification, Method, Verdict};
use primeform_core::{count, oracle, stest};

use report::ReportFormat;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "primeform",
    version,
    about = "Primality, prime counting, and prime location via exact floor sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify x as prime, composite, or neither
    IsPrime {
        x: u64,
        #[arg(long, value_enum, default_value = "s-test")]
        method: PrimalityMethod,
    },
    /// Count the primes up to x
    Pi {
        x: u64,
        #[arg(long, value_enum, default_value = "reduced")]
        method: CountMethod,
    },
    /// The nth prime, 1-indexed
    Nth {
        n: u64,
        /// Gate function used inside the bounded sum
        #[arg(long, value_enum, default_value = "b")]
        variant: VariantArg,
        /// Answer from the sieve instead of the formula
        #[arg(long)]
        oracle: bool,
    },
    /// The smallest prime strictly greater than n
    Next {
        n: u64,
        #[arg(long, value_enum, default_value = "scan")]
        method: NextMethod,
    },
    /// Reproduce the reference tables and report local timings
    Bench {
        #[arg(long, value_enum, default_value = "all")]
        table: bench::TableSelection,
        #[arg(long, value_enum, default_value = "human")]
        format: ReportFormat,
    },
    /// Sweep a formula against an independent oracle
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        /// Upper end of the sweep range
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value = "human")]
        format: ReportFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PrimalityMethod {
    /// Corrected total test (lookup + wheel + indicator)
    STest,
    /// Trial division ground truth
    Trial,
    /// The bare indicator with its full breakdown, no corrections
    STestRaw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Reduced,
    Full,
    Sieve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    A,
    B,
}

impl From<VariantArg> for GateVariant {
    fn from(v: VariantArg) -> GateVariant {
        match v {
            VariantArg::A => GateVariant::A,
            VariantArg::B => GateVariant::B,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NextMethod {
    Scan,
    Formula,
    PaperScan,
    Oracle,
}

/// Parses `args` (`args[0]` is the program name) and runs one subcommand,
/// writing normal output to `out` and diagnostics to `err`. Returns the
/// process exit code: 0 success, 1 usage error, 2 value mismatch.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_SUCCESS
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match cli.command {
        Command::IsPrime { x, method } => cmd_is_prime(x, method, out, err),
        Command::Pi { x, method } => cmd_pi(x, method, out, err),
        Command::Nth { n, variant, oracle } => cmd_nth(n, variant, oracle, out, err),
        Command::Next { n, method } => cmd_next(n, method, out, err),
        Command::Bench { table, format } => cmd_bench(table, format, out),
        Command::Verify { suite, max, format } => cmd_verify(suite, max, format, out, err),
    }
}

fn cmd_is_prime(x: u64, method: PrimalityMethod, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match method {
        PrimalityMethod::STest => {
            let v = stest::is_prime(x);
            let _ = writeln!(out, "{x}: {} ({})", v.classification, v.method);
            EXIT_SUCCESS
        }
        PrimalityMethod::Trial => {
            let classification = if x < 2 {
                Classification::UnitOrZero
            } else if oracle::trial_is_prime(x) {
                Classification::Prime
            } else {
                Classification::Composite
            };
            let v = Verdict {
                classification,
                method: Method::Oracle,
            };
            let _ = writeln!(out, "{x}: {} ({})", v.classification, v.method);
            EXIT_SUCCESS
        }
        PrimalityMethod::STestRaw => {
            if x == 0 {
                let _ = writeln!(err, "error: the raw indicator is defined for x >= 1");
                return EXIT_USAGE;
            }
            let b = stest::s_breakdown(x);
            let indicator = u64::from(b.s == primeform_core::exact::ExactRatio::ONE);
            let _ = writeln!(
                out,
                "{x}: indicator {indicator} (s = {}, s1 = {}, s2 = {}, K = {})",
                b.s, b.s1, b.s2, b.limit
            );
            if x < 11 || x.is_multiple_of(2) || x.is_multiple_of(3) {
                let _ = writeln!(
                    err,
                    "warning: the indicator certifies primality only for x >= 11 with \
                     gcd(x, 6) = 1; raw value shown for x = {x}"
                );
            }
            EXIT_SUCCESS
        }
    }
}

fn cmd_pi(x: u64, method: CountMethod, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match method {
        CountMethod::Reduced => count::pi_reduced(x).map(|r| r.count),
        CountMethod::Full => count::pi_full(x).map(|r| r.count),
        CountMethod::Sieve => oracle::oracle_pi(x),
    };
    match result {
        Ok(count) => {
            let _ = writeln!(out, "{count}");
            EXIT_SUCCESS
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_nth(
    n: u64,
    variant: VariantArg,
    use_oracle: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if n == 0 {
        let _ = writeln!(err, "error: n is 1-indexed");
        return EXIT_USAGE;
    }
    let result = if use_oracle {
        match oracle::oracle_nth(n) {
            Ok(p) => p,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        }
    } else {
        locate::nth_prime(n, variant.into())
    };
    let _ = writeln!(out, "{result}");
    EXIT_SUCCESS
}

fn cmd_next(n: u64, method: NextMethod, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match method {
        NextMethod::Scan => locate::next_prime_scan(n),
        NextMethod::Formula => {
            if n == 0 {
                let _ = writeln!(err, "error: the product-sum formula is defined for n >= 1");
                return EXIT_USAGE;
            }
            locate::next_prime_formula(n)
        }
        NextMethod::PaperScan => {
            if n < 5 {
                let _ = writeln!(err, "error: the characterized scan is defined for n >= 5");
                return EXIT_USAGE;
            }
            locate::next_prime_paper_scan(n)
        }
        NextMethod::Oracle => oracle::oracle_next(n),
    };
    let _ = writeln!(out, "{result}");
    EXIT_SUCCESS
}

fn cmd_bench(table: bench::TableSelection, format: ReportFormat, out: &mut dyn Write) -> i32 {
    let reports = bench::bench_tables(table);
    let mut first = true;
    for report in &reports {
        if !first && format == ReportFormat::Human {
            let _ = writeln!(out);
        }
        first = false;
        let _ = report.render(format, out);
    }
    if reports.iter().all(|r| r.all_match) {
        EXIT_SUCCESS
    } else {
        EXIT_MISMATCH
    }
}

fn cmd_verify(
    suite: verify::Suite,
    max: u64,
    format: ReportFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match verify::run_suite(suite, max) {
        Ok(report) => {
            let _ = report.render(format, out);
            if report.all_match {
                EXIT_SUCCESS
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
