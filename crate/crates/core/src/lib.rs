//! Exact-arithmetic kernel for even-index Bernoulli numbers.
//!
//! The library computes the lower-Hessenberg determinant sequence `D_k`
//! (reciprocals of odd factorials on the upper triangle, unit subdiagonal)
//! two independent ways, evaluates the explicit determinant formula for
//! `B_{2p}`, and cross-checks every value against the classical recursion,
//! the von Staudt–Clausen denominator law, and the `zeta(2p)` asymptotic.
//!
//! All arithmetic is exact: every fractional quantity lives in
//! [`ExactRational`], a canonical arbitrary-precision fraction. The one
//! deliberately inexact corner is [`precision`], a rounded-arithmetic
//! emulator used to measure how many bits fixed-width evaluation loses.
//!
//! The crate is `no_std` (requires `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

use core::fmt;

pub mod bernoulli;
pub mod combinatorics;
pub mod determinant;
pub mod metrics;
pub mod precision;
pub mod rational;

pub use bernoulli::{
    bernoulli_explicit, bernoulli_oracle, verify, vsc_denominator, BernoulliTable,
    BernoulliValue, Source, VerificationRecord,
};
pub use combinatorics::{binomial, factorial, odd_factorial_reciprocals, FactorialTable};
pub use determinant::{DeterminantSequence, HessenbergMatrix};
pub use precision::{precision_study, PrecisionReport};
pub use rational::{ExactRational, RoundingMode};

/// Errors reported by the kernel. Contract violations carry enough
/// context to name the offending argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by an exact zero.
    DivisionByZero,
    /// `binomial(n, k)` with `k > n`.
    BinomialDomain { n: u64, k: u64 },
    /// A determinant sequence shorter than the requested index.
    SequenceTooShort { required: usize, actual: usize },
    /// Rounded-arithmetic emulation below the minimum significand width.
    SignificandTooNarrow { bits: u32, min: u32 },
    /// A string that does not parse as an exact rational.
    ParseRational,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::BinomialDomain { n, k } => {
                write!(f, "binomial({n}, {k}) requires k <= n")
            }
            Error::SequenceTooShort { required, actual } => write!(
                f,
                "determinant sequence too short: need max index >= {required}, have {actual}"
            ),
            Error::SignificandTooNarrow { bits, min } => {
                write!(f, "significand width {bits} below minimum {min}")
            }
            Error::ParseRational => write!(f, "malformed rational literal"),
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
