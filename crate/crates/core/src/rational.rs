//! Canonical arbitrary-precision rationals.
//!
//! [`ExactRational`] is the universal number type of the crate: a fraction
//! in canonical form (coprime numerator/denominator, denominator > 0,
//! zero as `0/1`). Every operation re-canonicalizes eagerly, so equality
//! is plain structural equality and each value has a unique representative.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::metrics;
use crate::Error;

/// How [`ExactRational::to_decimal`] resolves the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundingMode {
    /// Round to nearest, ties to the even last digit.
    RoundHalfEven,
    /// Drop the tail (round toward zero).
    Truncate,
}

/// An exact rational number in canonical form.
///
/// Invariants (checked by construction, never observable broken):
/// - denominator > 0
/// - gcd(|numerator|, denominator) = 1
/// - zero is `0/1`
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: BigInt,
    den: BigInt,
}

impl ExactRational {
    /// Builds `num/den` in canonical form. Errors when `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> crate::Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    /// Convenience constructor from machine integers. Panics on `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::normalized(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// Canonicalize: positive denominator, reduced, zero as 0/1.
    fn normalized(mut num: BigInt, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Self { num, den }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn abs(&self) -> Self {
        Self {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    /// Exact division; division by zero is a reported error.
    pub fn checked_div(&self, rhs: &Self) -> crate::Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        metrics::record_rat_mul();
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn recip(&self) -> crate::Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// `self^exp` by binary exponentiation on the (coprime) components.
    pub fn pow(&self, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        // components stay coprime under powers, no gcd needed
        Self {
            num: Pow::pow(&self.num, exp),
            den: Pow::pow(&self.den, exp),
        }
    }

    /// Decimal expansion with exactly `digits` fractional digits.
    ///
    /// The stored value stays exact; this is presentation only.
    pub fn to_decimal(&self, digits: usize, mode: RoundingMode) -> String {
        assert!(digits >= 1, "digits must be >= 1");
        let ten_pow = Pow::pow(&BigInt::from(10), digits);
        let scaled = self.num.abs() * &ten_pow;
        let (mut q, rem) = scaled.div_rem(&self.den);
        if let RoundingMode::RoundHalfEven = mode {
            let twice: BigInt = &rem * 2;
            match twice.cmp(&self.den) {
                Ordering::Greater => q += 1,
                Ordering::Equal => {
                    if q.is_odd() {
                        q += 1;
                    }
                }
                Ordering::Less => {}
            }
        }
        let (int_part, frac_part) = q.div_rem(&ten_pow);
        let sign = if self.is_negative() && !q.is_zero() {
            "-"
        } else {
            ""
        };
        let mut frac = frac_part.to_string();
        while frac.len() < digits {
            frac.insert(0, '0');
        }
        alloc::format!("{sign}{int_part}.{frac}")
    }

    /// `floor(log2(|self|))` for nonzero values.
    pub(crate) fn floor_log2(&self) -> i64 {
        debug_assert!(!self.is_zero());
        let n = self.num.abs();
        let d = &self.den;
        let mut e = n.bits() as i64 - d.bits() as i64;
        // |self| >= 2^e ?
        let holds = if e >= 0 {
            n >= d << (e as u64)
        } else {
            (&n << ((-e) as u64)) >= *d
        };
        if !holds {
            e -= 1;
        }
        e
    }

    /// `ceil(log2(|self|))` for nonzero values.
    pub(crate) fn ceil_log2(&self) -> i64 {
        let f = self.floor_log2();
        // exact power of two iff both components are powers of two
        let pow2 = self.num.magnitude().count_ones() == 1
            && self.den.magnitude().count_ones() == 1;
        if pow2 {
            f
        } else {
            f + 1
        }
    }
}

impl Add for &ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: &ExactRational) -> ExactRational {
        ExactRational::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: &ExactRational) -> ExactRational {
        ExactRational::normalized(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: &ExactRational) -> ExactRational {
        metrics::record_rat_mul();
        ExactRational::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        -&self
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, cross-multiplication preserves order
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Parses `"num"` or `"num/den"`.
    fn from_str(s: &str) -> crate::Result<Self> {
        let parts: Vec<&str> = s.split('/').collect();
        match parts.as_slice() {
            [n] => {
                let num = BigInt::from_str(n).map_err(|_| Error::ParseRational)?;
                Ok(Self::from_integer(num))
            }
            [n, d] => {
                let num = BigInt::from_str(n).map_err(|_| Error::ParseRational)?;
                let den = BigInt::from_str(d).map_err(|_| Error::ParseRational)?;
                Self::new(num, den)
            }
            _ => Err(Error::ParseRational),
        }
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}
