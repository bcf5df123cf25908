//! Primality through floor sums, with exact arithmetic end to end.
//!
//! The centerpiece is an indicator built from the sum
//! `−(1/K) · Σ_{k=1..K} ⌊⌊x/(6k±1)⌋ − x/(6k±1)⌋` with `K = ⌊⌊√x⌋/6⌋ + 1`:
//! for `x ≥ 11` coprime to 6, the averaged sum equals 1 exactly when `x` is
//! prime ([`stest`]). On top of it sit a prime-counting function in several
//! algebraically equivalent forms ([`count`]) and bounded-sum constructions
//! of the nth prime and the next prime ([`locate`]).
//!
//! Every value that feeds a floor is computed in integer or rational
//! arithmetic ([`exact`]); no floating point touches any result. Classical
//! ground truth (sieve, trial division) lives in [`oracle`] so each formula
//! can be checked against an algorithm that shares none of its machinery.

pub mod count;
pub mod exact;
pub mod locate;
pub mod oracle;
pub mod stest;

/// Errors surfaced by operations with restricted domains or resource limits.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument fell below the smallest input the operation is defined on.
    #[error("{op}: argument {got} is below the domain minimum {min}")]
    BelowDomain {
        op: &'static str,
        min: u64,
        got: u64,
    },
    /// A sieve allocation would exceed the caller's memory budget.
    #[error("sieve to {limit} needs about {needed} bytes, over the {budget}-byte budget")]
    SieveBudget {
        limit: u64,
        needed: u64,
        budget: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
