//! Integer and rational primitives shared by every formula in the crate.
//!
//! Everything here is exact. Results never pass through floating point, so a
//! floor computed at `x = 10^13` is just as trustworthy as one at `x = 25`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div};

/// The natural-number domain all the formulas operate on.
pub type Natural = u64;

/// Floor of the square root: the unique `r` with `r² ≤ x < (r+1)²`.
///
/// Delegates to the standard library's pure-integer implementation; this
/// wrapper exists so call sites name the operation the way the formulas do.
#[inline]
pub fn isqrt(x: u64) -> u64 {
    x.isqrt()
}

/// True when `d` divides `x` exactly.
///
/// Panics if `d == 0`.
#[inline]
pub fn divides(d: u64, x: u64) -> bool {
    assert!(d != 0, "divides: divisor must be nonzero");
    x.is_multiple_of(d)
}

/// The summand `⌊⌊x/d⌋ − x/d⌋`: `0` when `d | x`, `−1` otherwise.
///
/// `⌊x/d⌋ − x/d` is the negated fractional part of `x/d`, so its floor is 0
/// exactly on divisors. Evaluating through that identity keeps the term in
/// integer arithmetic instead of forming the fraction.
///
/// Panics if `d == 0`.
#[inline]
pub fn floor_term(x: u64, d: u64) -> i64 {
    assert!(d != 0, "floor_term: divisor must be nonzero");
    if x.is_multiple_of(d) {
        0
    } else {
        -1
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An exact rational in canonical form: positive denominator, fully reduced.
///
/// The averaged floor sums live in `[0, 1]` with denominators bounded by
/// `2K ≤ ⌊√x⌋/3 + 2`, so `i64/u64` components never come close to
/// overflowing; intermediates widen to `i128` anyway.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRatio {
    num: i64,
    den: u64,
}

impl ExactRatio {
    pub const ZERO: ExactRatio = ExactRatio { num: 0, den: 1 };
    pub const ONE: ExactRatio = ExactRatio { num: 1, den: 1 };

    /// `num/den` reduced to canonical form. Panics if `den == 0`.
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den != 0, "ExactRatio: zero denominator");
        let g = gcd(num.unsigned_abs(), den);
        ExactRatio {
            num: num / g as i64,
            den: den / g,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        ExactRatio { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Largest integer not exceeding the ratio (floor division, exact).
    pub fn floor(&self) -> i64 {
        let q = (self.num as i128).div_euclid(self.den as i128);
        q as i64
    }
}

impl Add for ExactRatio {
    type Output = ExactRatio;

    fn add(self, rhs: ExactRatio) -> ExactRatio {
        let num = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        let den = self.den as u128 * rhs.den as u128;
        let g = {
            let (mut a, mut b) = (num.unsigned_abs(), den);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a.max(1)
        };
        ExactRatio {
            num: (num / g as i128).try_into().expect("ExactRatio overflow"),
            den: (den / g).try_into().expect("ExactRatio overflow"),
        }
    }
}

impl Div<u64> for ExactRatio {
    type Output = ExactRatio;

    /// Panics if `rhs == 0`.
    fn div(self, rhs: u64) -> ExactRatio {
        assert!(rhs != 0, "ExactRatio: division by zero");
        let num = self.num as i128;
        let den = self.den as u128 * rhs as u128;
        let g = {
            let (mut a, mut b) = (num.unsigned_abs(), den);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a.max(1)
        };
        ExactRatio {
            num: (num / g as i128).try_into().expect("ExactRatio overflow"),
            den: (den / g).try_into().expect("ExactRatio overflow"),
        }
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiplied comparison stays exact in i128.
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
