//! Positive braid monoids as well-ordered sets.
//!
//! The 3-strand machinery (exponent sequences, the braid order, Garside
//! complexity, the hydra-like descending sequences and their ordinal mirror)
//! lives in the first few modules; `special` extends the dynamics to special
//! n-braids. Every closed formula has a brute-force counterpart so the two can
//! be checked against each other.

pub mod divisors;
pub mod error;
pub mod expseq;
pub mod garside;
pub mod growth;
pub mod hydra;
pub mod ordinal;
pub mod special;
pub mod verify;
pub mod wo;
pub mod word;

pub use error::{Error, Result};
pub use expseq::{compare, normalize, ExpSeq};
pub use ordinal::Ordinal;
pub use word::BraidWord;

/// Arbitrary precision natural number used for step indices and Hardy values.
pub type Nat = num_bigint::BigUint;

/// Default Hardy budget, in bits of the running argument.
pub const DEFAULT_BUDGET_BITS: u64 = 1 << 20;
