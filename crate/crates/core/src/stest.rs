//! The floor-sum primality indicator over the 6k±1 wheel.
//!
//! For `x ≥ 1` let `K = ⌊⌊√x⌋/6⌋ + 1`. The two half-sums
//!
//! ```text
//! S1(x) = −(1/K) · Σ_{k=1..K} ⌊⌊x/(6k+1)⌋ − x/(6k+1)⌋
//! S2(x) = −(1/K) · Σ_{k=1..K} ⌊⌊x/(6k−1)⌋ − x/(6k−1)⌋
//! ```
//!
//! each count, in units of `1/K`, how many wheel values `6k±1 ≤ 6K±1` do
//! *not* divide `x` ([`crate::exact::floor_term`]). Their average
//! `S = (S1 + S2)/2` therefore equals 1 exactly when no wheel value in range
//! divides `x`. The wheel reaches past `√x` for every `x`, so for `x ≥ 11`
//! with `gcd(x, 6) = 1` that happens precisely when `x` is prime: any
//! composite such `x` has a prime factor `p ≤ √x` with `p ≡ ±1 (mod 6)`.
//!
//! Below that domain the raw value is still defined but no longer a
//! primality certificate: `S(1) = 1` (vacuously, nothing in the tiny range
//! divides it), and `S(5) = S(7) = 1/2` because 5 and 7 themselves appear as
//! wheel values and each knocks out one half-sum. [`is_prime`] fences those
//! cases off with direct lookups so callers never see the anomalies.

use crate::exact::{floor_term, isqrt, ExactRatio};

/// Number of wheel terms per half-sum: `K = ⌊⌊√x⌋/6⌋ + 1`.
///
/// The largest wheel value examined is `6K − 1 > ⌊√x⌋`, so the scan always
/// covers every candidate divisor up to the square root. Panics if `x == 0`.
pub fn summation_limit(x: u64) -> u64 {
    assert!(x >= 1, "summation_limit: x must be positive");
    isqrt(x) / 6 + 1
}

/// The `6k+1` half-sum `S1(x)`, as an exact rational. Panics if `x == 0`.
pub fn s1(x: u64) -> ExactRatio {
    let k = summation_limit(x);
    let sum: i64 = (1..=k).map(|j| floor_term(x, 6 * j + 1)).sum();
    ExactRatio::new(-sum, k)
}

/// The `6k−1` half-sum `S2(x)`, as an exact rational. Panics if `x == 0`.
pub fn s2(x: u64) -> ExactRatio {
    let k = summation_limit(x);
    let sum: i64 = (1..=k).map(|j| floor_term(x, 6 * j - 1)).sum();
    ExactRatio::new(-sum, k)
}

/// Everything one evaluation of `S` learns about `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SBreakdown {
    pub x: u64,
    /// The per-half term count `K`.
    pub limit: u64,
    pub s1: ExactRatio,
    pub s2: ExactRatio,
    /// The averaged sum `S = (S1 + S2)/2`.
    pub s: ExactRatio,
    /// Wheel values `6k±1`, `k ≤ K`, that divide `x`, ascending. Empty
    /// exactly when `s == 1`.
    pub zero_divisors: Vec<u64>,
}

/// Evaluates both half-sums once and reports the full decomposition.
/// Panics if `x == 0`.
pub fn s_breakdown(x: u64) -> SBreakdown {
    let k = summation_limit(x);
    let mut sum_plus: i64 = 0;
    let mut sum_minus: i64 = 0;
    let mut zero_divisors = Vec::new();
    for j in 1..=k {
        let plus = 6 * j + 1;
        let t = floor_term(x, plus);
        sum_plus += t;
        if t == 0 {
            zero_divisors.push(plus);
        }
        let minus = 6 * j - 1;
        let t = floor_term(x, minus);
        sum_minus += t;
        if t == 0 {
            zero_divisors.push(minus);
        }
    }
    zero_divisors.sort_unstable();
    let s1 = ExactRatio::new(-sum_plus, k);
    let s2 = ExactRatio::new(-sum_minus, k);
    let s = (s1 + s2) / 2;
    SBreakdown {
        x,
        limit: k,
        s1,
        s2,
        s,
        zero_divisors,
    }
}

/// Averaged sum `S(x) = (S1(x) + S2(x)) / 2`. Panics if `x == 0`.
pub fn s(x: u64) -> ExactRatio {
    (s1(x) + s2(x)) / 2
}

/// `⌊S(x)⌋` for `x ≥ 1`, always 0 or 1.
///
/// `S(x) = 1` iff no wheel value in range divides `x`, so the floor can be
/// decided by a divisor scan that bails at the first hit instead of always
/// walking all `2K` terms. Panics if `x == 0`.
pub fn s_indicator(x: u64) -> u64 {
    let k = summation_limit(x);
    for j in 1..=k {
        if x.is_multiple_of(6 * j + 1) || x.is_multiple_of(6 * j - 1) {
            return 0;
        }
    }
    1
}

/// How a [`Verdict`] classified its input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Prime,
    Composite,
    /// 0 and 1: neither prime nor composite.
    UnitOrZero,
}

/// Which decision path produced a [`Verdict`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// The floor-sum indicator, on its certified domain.
    STest,
    /// Direct table lookup (`x ≤ 7` special cases).
    Lookup,
    /// Divisibility by 2 or 3 (off-wheel composites).
    Wheel,
    /// Classical trial division, used by the ground-truth paths.
    Oracle,
}

/// A primality answer plus the path that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub classification: Classification,
    pub method: Method,
}

impl Verdict {
    pub fn is_prime(&self) -> bool {
        self.classification == Classification::Prime
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Prime => "prime",
            Classification::Composite => "composite",
            Classification::UnitOrZero => "unit-or-zero",
        })
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::STest => "s-test",
            Method::Lookup => "lookup",
            Method::Wheel => "wheel",
            Method::Oracle => "oracle",
        })
    }
}

/// Total primality test: the floor-sum indicator on its certified domain,
/// with the handful of small or off-wheel cases dispatched directly.
///
/// - `x < 2`: neither prime nor composite.
/// - `x ∈ {2, 3, 5, 7}`: prime by lookup (5 and 7 sit where the raw sum
///   misreports, and 2 and 3 are off the wheel entirely).
/// - even `x` or multiples of 3: composite by wheel membership.
/// - everything else is `≥ 11` and coprime to 6, where `⌊S(x)⌋` decides.
pub fn is_prime(x: u64) -> Verdict {
    use Classification::*;
    use Method::*;
    if x < 2 {
        return Verdict {
            classification: UnitOrZero,
            method: Lookup,
        };
    }
    if matches!(x, 2 | 3 | 5 | 7) {
        return Verdict {
            classification: Prime,
            method: Lookup,
        };
    }
    if x.is_multiple_of(2) || x.is_multiple_of(3) {
        return Verdict {
            classification: Composite,
            method: Wheel,
        };
    }
    let classification = if s_indicator(x) == 1 {
        Prime
    } else {
        Composite
    };
    Verdict {
        classification,
        method: STest,
    }
}
