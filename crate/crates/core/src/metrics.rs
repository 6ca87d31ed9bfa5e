//! Operation counters for the benchmark harness.
//!
//! Counts exact rational multiplications (including divisions, which cost
//! one cross-multiplication each) as a machine-independent work proxy.

use core::sync::atomic::{AtomicU64, Ordering};

static RAT_MULS: AtomicU64 = AtomicU64::new(0);

pub(crate) fn record_rat_mul() {
    RAT_MULS.fetch_add(1, Ordering::Relaxed);
}

/// Rational multiplications performed since the last reset.
pub fn rat_mul_count() -> u64 {
    RAT_MULS.load(Ordering::Relaxed)
}

pub fn reset_rat_mul_count() {
    RAT_MULS.store(0, Ordering::Relaxed);
}
