//! Classical ground truth: a sieve of Eratosthenes and direct trial
//! division.
//!
//! Everything in this module is deliberately boring and shares no code with
//! the floor-sum formulas, not even the wheel enumeration, so agreement
//! between the two sides is evidence rather than tautology.

use crate::{Error, Result};

/// Default cap on sieve memory (flags + prefix counts + prime list).
pub const DEFAULT_SIEVE_BUDGET_BYTES: u64 = 512 << 20;

/// A sieve of Eratosthenes with precomputed prefix counts.
#[derive(Debug, Clone)]
pub struct SieveTable {
    pub limit: u64,
    /// `flags[x]` is true iff `x` is prime; indices `0..=limit`.
    pub flags: Vec<bool>,
    /// All primes `≤ limit`, ascending.
    pub prime_list: Vec<u64>,
    /// `prefix_counts[x] = π(x)`; indices `0..=limit`.
    pub prefix_counts: Vec<u64>,
}

impl SieveTable {
    pub fn is_prime(&self, x: u64) -> bool {
        self.flags[usize::try_from(x).expect("index fits usize")]
    }

    /// `π(x)` for any `x ≤ limit`.
    pub fn pi(&self, x: u64) -> u64 {
        self.prefix_counts[usize::try_from(x).expect("index fits usize")]
    }
}

/// Sieves `[0, limit]` under the default memory budget. Requires `limit ≥ 2`.
pub fn build_sieve(limit: u64) -> Result<SieveTable> {
    build_sieve_with_budget(limit, DEFAULT_SIEVE_BUDGET_BYTES)
}

/// Sieves `[0, limit]`, refusing up front if the tables would exceed
/// `budget_bytes`. Requires `limit ≥ 2`.
pub fn build_sieve_with_budget(limit: u64, budget_bytes: u64) -> Result<SieveTable> {
    if limit < 2 {
        return Err(Error::BelowDomain {
            op: "build_sieve",
            min: 2,
            got: limit,
        });
    }
    // One flag byte and one u64 prefix entry per index, plus the prime list
    // (comfortably under one more u64-equivalent per index).
    let needed = (limit + 1).saturating_mul(10);
    if needed > budget_bytes {
        return Err(Error::SieveBudget {
            limit,
            needed,
            budget: budget_bytes,
        });
    }
    let n = usize::try_from(limit).expect("sieve limit fits usize");
    let mut flags = vec![true; n + 1];
    flags[0] = false;
    flags[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if flags[p] {
            let mut m = p * p;
            while m <= n {
                flags[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    let mut prime_list = Vec::new();
    let mut prefix_counts = Vec::with_capacity(n + 1);
    let mut count = 0u64;
    for (x, &is_p) in flags.iter().enumerate() {
        if is_p {
            count += 1;
            prime_list.push(x as u64);
        }
        prefix_counts.push(count);
    }
    Ok(SieveTable {
        limit,
        flags,
        prime_list,
        prefix_counts,
    })
}

/// Trial division over 2, 3, and the `6k±1` candidates up to `√x`.
///
/// Handles the full `u64` range; the loop guard `d ≤ x/d` avoids ever
/// forming `d²`.
pub fn trial_is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x < 4 {
        return true;
    }
    if x.is_multiple_of(2) || x.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d <= x / d {
        if x.is_multiple_of(d) || x.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// The nth prime (1-indexed: `oracle_nth(1) = 2`), by sieving to a proven
/// upper bound. Panics if `n == 0`; errors if the sieve would bust the
/// default memory budget.
pub fn oracle_nth(n: u64) -> Result<u64> {
    assert!(n >= 1, "oracle_nth: n must be at least 1");
    const SMALL: [u64; 5] = [2, 3, 5, 7, 11];
    if n <= 5 {
        return Ok(SMALL[n as usize - 1]);
    }
    // p_n < n(ln n + ln ln n) for n ≥ 6. Floating point is fine here: it
    // only sizes the sieve, with slack added, and the result itself comes
    // from the sieve.
    let nf = n as f64;
    let bound = (nf * (nf.ln() + nf.ln().ln())).ceil() as u64 + 16;
    let sieve = build_sieve(bound)?;
    Ok(sieve.prime_list[n as usize - 1])
}

/// Smallest prime strictly greater than `n`, by incrementing and trial
/// dividing. Total on all of `u64` short of the last prime.
pub fn oracle_next(n: u64) -> u64 {
    let mut m = n + 1;
    while !trial_is_prime(m) {
        m += 1;
    }
    m
}

/// `π(x)` from a sieve. Errors if the sieve would bust the default budget.
pub fn oracle_pi(x: u64) -> Result<u64> {
    if x < 2 {
        return Ok(0);
    }
    Ok(build_sieve(x)?.pi(x))
}
