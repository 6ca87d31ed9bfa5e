//! Rounded-arithmetic emulation and the cancellation study.
//!
//! The explicit Bernoulli formula subtracts intermediates much larger
//! than its alternating-sum result; this module measures how many bits a
//! fixed-width pipeline loses by re-running the evaluation with every
//! binary operation rounded to a given binary significand width
//! (round-half-even, unbounded exponent).

use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::bernoulli::eval_explicit_with;
use crate::determinant::DeterminantSequence;
use crate::rational::ExactRational;
use crate::{Error, Result};

/// Minimum emulated significand width.
pub const MIN_SIGNIFICAND_BITS: u32 = 8;

/// An arithmetic pipeline: exact, or rounded after every operation.
///
/// `lift` models loading a constant into the pipeline; the default
/// binary operations compute exactly and then `lift` the result.
pub trait ArithCtx {
    fn lift(&self, r: ExactRational) -> ExactRational;

    fn add(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        self.lift(a + b)
    }
    fn sub(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        self.lift(a - b)
    }
    fn mul(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        self.lift(a * b)
    }
    /// Division by a pipeline value known to be nonzero.
    fn div(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        self.lift(a.checked_div(b).expect("nonzero divisor"))
    }

    /// `base^exp` by binary exponentiation through the pipeline.
    fn pow(&self, base: &ExactRational, mut exp: u64) -> ExactRational {
        let mut acc = self.lift(ExactRational::one());
        let mut sq = base.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }
}

/// Exact pipeline: the identity lift.
pub struct ExactArith;

impl ArithCtx for ExactArith {
    fn lift(&self, r: ExactRational) -> ExactRational {
        r
    }
}

/// Pipeline that rounds every result to `bits` significand bits.
pub struct RoundedArith {
    bits: u32,
}

impl RoundedArith {
    pub fn new(bits: u32) -> Result<Self> {
        if bits < MIN_SIGNIFICAND_BITS {
            return Err(Error::SignificandTooNarrow {
                bits,
                min: MIN_SIGNIFICAND_BITS,
            });
        }
        Ok(Self { bits })
    }
}

impl ArithCtx for RoundedArith {
    fn lift(&self, r: ExactRational) -> ExactRational {
        round_to_significand(&r, self.bits)
    }
}

/// Rounds `r` to the nearest value of the form `±m·2^e` with `m` holding
/// exactly `bits` significand bits (round-half-even, unbounded exponent).
pub fn round_to_significand(r: &ExactRational, bits: u32) -> ExactRational {
    assert!(bits >= 1);
    if r.is_zero() {
        return ExactRational::zero();
    }
    let e = r.floor_log2(); // |r| in [2^e, 2^(e+1))
    let shift = bits as i64 - 1 - e;
    let n = r.numerator().magnitude();
    let d = r.denominator().magnitude();
    // significand = round_half_even(|r| * 2^shift), landing in [2^(bits-1), 2^bits]
    let (num, den) = if shift >= 0 {
        (BigInt::from(n << (shift as u64)), BigInt::from(d.clone()))
    } else {
        (
            BigInt::from(n.clone()),
            BigInt::from(d << ((-shift) as u64)),
        )
    };
    let (mut q, rem) = num.div_rem(&den);
    let twice = &rem * 2;
    if twice > den || (twice == den && q.is_odd()) {
        q += 1;
    }
    let value = if shift >= 0 {
        ExactRational::new(q, BigInt::one() << (shift as u64)).expect("power of two")
    } else {
        ExactRational::from_integer(q << ((-shift) as u64))
    };
    if r.is_negative() {
        -value
    } else {
        value
    }
}

/// Outcome of one rounded re-evaluation of the explicit formula.
///
/// `relative_error` is `None` exactly when the rounded run collapsed a
/// nonzero value to zero (total loss).
#[derive(Debug, Clone)]
pub struct PrecisionReport {
    pub p: u64,
    pub significand_bits: u32,
    pub relative_error: Option<ExactRational>,
    pub lost_bits: u32,
}

impl PrecisionReport {
    /// `relative_error` as a short decimal string, or `"total-loss"`.
    pub fn relative_error_string(&self) -> String {
        match &self.relative_error {
            None => String::from("total-loss"),
            Some(rel) if rel.is_zero() => String::from("0"),
            Some(rel) => to_scientific(rel, 6),
        }
    }
}

/// Renders a positive rational as `d.dddddde±XX`.
fn to_scientific(r: &ExactRational, sig_digits: usize) -> String {
    debug_assert!(r.is_positive());
    // floor(log10 |r|) by scaling into [1, 10)
    let mut e10: i64 = (r.numerator().magnitude().bits() as i64
        - r.denominator().magnitude().bits() as i64)
        .saturating_mul(30103)
        / 100000; // log10(2) ~ 0.30103, then correct below
    let ten = ExactRational::from_integer(10);
    let scaled = |e: i64| -> ExactRational {
        if e >= 0 {
            r.checked_div(&ten.pow(e as u32)).expect("nonzero")
        } else {
            r * &ten.pow((-e) as u32)
        }
    };
    let mut m = scaled(e10);
    while m >= ten {
        e10 += 1;
        m = scaled(e10);
    }
    while m < ExactRational::one() {
        e10 -= 1;
        m = scaled(e10);
    }
    let mantissa = m.to_decimal(sig_digits, crate::rational::RoundingMode::RoundHalfEven);
    alloc::format!("{mantissa}e{e10}")
}

/// Re-evaluates the explicit formula for `B_{2p}` with every operation
/// rounded to `significand_bits` bits and reports the damage relative to
/// the exact value.
pub fn precision_study(
    p: u64,
    significand_bits: u32,
    seq: &DeterminantSequence,
) -> Result<PrecisionReport> {
    let rounded_ctx = RoundedArith::new(significand_bits)?;
    let exact = eval_explicit_with(p, seq, &ExactArith)?;
    let rounded = eval_explicit_with(p, seq, &rounded_ctx)?;
    debug_assert!(!exact.is_zero());
    if rounded.is_zero() {
        return Ok(PrecisionReport {
            p,
            significand_bits,
            relative_error: None,
            lost_bits: significand_bits,
        });
    }
    let rel = (&exact - &rounded).abs().checked_div(&exact.abs())?;
    let lost_bits = if rel.is_zero() {
        0
    } else {
        // rel <= 2^-c with c = -ceil(log2 rel) correct leading bits
        let correct = (-rel.ceil_log2()).max(0) as u32;
        significand_bits.saturating_sub(correct)
    };
    Ok(PrecisionReport {
        p,
        significand_bits,
        relative_error: Some(rel),
        lost_bits,
    })
}
