//! Prime counting `π(x)` in three algebraically equivalent forms.
//!
//! All three share the constant 4, which stands in for the primes
//! {2, 3, 5, 7} the floor-sum machinery cannot certify, and differ in how
//! they walk the rest:
//!
//! - [`pi_full`] sums the total primality test over every integer,
//! - [`pi_reduced`] sums the raw indicator over wheel values `6j±1` only,
//! - [`pi_running`] streams `(x, π(x))` left to right so a sweep pays for
//!   each point once instead of re-evaluating the whole prefix.
//!
//! The reduced form leans on the small-x anomalies instead of fencing them
//! off: its `j` ranges bring in `x = 5` and `x = 7`, whose raw indicator is
//! `⌊1/2⌋ = 0`, which is exactly why both can already sit inside the
//! constant 4 without double counting.

use crate::stest;
use crate::{Error, Result};

/// Which formulation produced a [`PiResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiMethod {
    Full,
    Reduced,
    Incremental,
    Oracle,
}

impl std::fmt::Display for PiMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PiMethod::Full => "full",
            PiMethod::Reduced => "reduced",
            PiMethod::Incremental => "incremental",
            PiMethod::Oracle => "oracle",
        })
    }
}

/// A prime count along with the formulation that computed it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiResult {
    pub x: u64,
    pub count: u64,
    pub method: PiMethod,
}

/// `π(n) = 4 + Σ_{i=8..n} [i prime]`, with the summand decided by the total
/// primality test.
///
/// The constant already counts {2, 3, 5, 7}, so the sum must start *above* 7:
/// starting it at 7 would be correct only under the raw indicator, whose
/// `⌊S(7)⌋ = 0` anomaly silently skips the prime the constant owns.
/// Defined for `n ≥ 7`.
pub fn pi_full(n: u64) -> Result<PiResult> {
    if n < 7 {
        return Err(Error::BelowDomain {
            op: "pi_full",
            min: 7,
            got: n,
        });
    }
    let above: u64 = (8..=n)
        .map(|i| u64::from(stest::is_prime(i).is_prime()))
        .sum();
    Ok(PiResult {
        x: n,
        count: 4 + above,
        method: PiMethod::Full,
    })
}

/// `π(x) = 4 + Σ_{j=1..⌊(x−1)/6⌋} ⌊S(6j+1)⌋ + Σ_{j=1..⌊(x+1)/6⌋} ⌊S(6j−1)⌋`.
///
/// Only wheel values are visited, with the *raw* indicator: every prime above
/// 7 is a wheel value scoring 1, every composite wheel value scores 0, and
/// the two anomalous wheel values the ranges pull in (5 and 7) score 0 so the
/// constant 4 absorbs them. Defined for `x ≥ 7`.
pub fn pi_reduced(x: u64) -> Result<PiResult> {
    if x < 7 {
        return Err(Error::BelowDomain {
            op: "pi_reduced",
            min: 7,
            got: x,
        });
    }
    let plus: u64 = (1..=(x - 1) / 6)
        .map(|j| stest::s_indicator(6 * j + 1))
        .sum();
    let minus: u64 = (1..=(x + 1) / 6)
        .map(|j| stest::s_indicator(6 * j - 1))
        .sum();
    Ok(PiResult {
        x,
        count: 4 + plus + minus,
        method: PiMethod::Reduced,
    })
}

/// Streams `(x, π(x))` for `x = 7, 8, …, end` with one primality evaluation
/// per point.
///
/// A sweep over `[7, end]` through the direct formulas costs `Θ(end)` work
/// *per point*; the running form keeps the prefix count and costs it once.
/// Panics if `end < 7`.
pub fn pi_running(end: u64) -> impl Iterator<Item = (u64, u64)> {
    assert!(end >= 7, "pi_running: end must be at least 7");
    let mut count = 3u64; // π(6)
    (7..=end).map(move |x| {
        if stest::is_prime(x).is_prime() {
            count += 1;
        }
        (x, count)
    })
}

/// Running evaluation of the reduced formula: yields `(x, π(x))` for
/// `x = 7, 8, …, end`, where each value is exactly what [`pi_reduced`]
/// returns at that `x`.
///
/// Raising `x` only ever appends terms to the two `j`-ranges (a new `6j+1`
/// term when `x ≡ 1 (mod 6)`, a new `6j−1` term when `x ≡ 5 (mod 6)`), so
/// the whole sweep costs one raw-indicator evaluation per wheel value.
/// Panics if `end < 7`.
pub fn pi_reduced_running(end: u64) -> impl Iterator<Item = (u64, u64)> {
    assert!(end >= 7, "pi_reduced_running: end must be at least 7");
    // At x = 7 the ranges hold j = 1 on both sides: 4 + ⌊S(7)⌋ + ⌊S(5)⌋.
    let mut count = 4 + stest::s_indicator(7) + stest::s_indicator(5);
    (7..=end).map(move |x| {
        if x > 7 && (x % 6 == 1 || x % 6 == 5) {
            count += stest::s_indicator(x);
        }
        (x, count)
    })
}

/// The prefix `π(7), π(8), …, π(range_end)` as a vector, via [`pi_running`].
/// Panics if `range_end < 7`.
pub fn pi_incremental(range_end: u64) -> Vec<PiResult> {
    pi_running(range_end)
        .map(|(x, count)| PiResult {
            x,
            count,
            method: PiMethod::Incremental,
        })
        .collect()
}
