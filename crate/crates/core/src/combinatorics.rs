//! Integer combinatorics: factorials, binomials, and the odd-factorial
//! table that feeds the determinant recurrence.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::ExactRational;
use crate::Error;

/// `n!`, with `0! = 1`.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Exact `n` choose `k` by the multiplicative formula; every intermediate
/// division is exact, no rationals appear.
pub fn binomial(n: u64, k: u64) -> crate::Result<BigInt> {
    if k > n {
        return Err(Error::BinomialDomain { n, k });
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    Ok(acc)
}

/// Table of odd factorials: entry `l` is `(2l+1)!` for `l = 0..=limit`.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    values: Vec<BigInt>,
}

impl FactorialTable {
    /// Builds the table incrementally: entry 0 is `1! = 1`,
    /// entry `l` is entry `l-1` times `(2l)(2l+1)`.
    pub fn new(limit: usize) -> Self {
        let mut values = vec![BigInt::one()];
        for l in 1..=limit as u64 {
            let next = &values[values.len() - 1] * (2 * l) * (2 * l + 1);
            values.push(next);
        }
        Self { values }
    }

    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    /// `(2l+1)!`
    pub fn odd_factorial(&self, l: usize) -> &BigInt {
        &self.values[l]
    }
}

/// The matrix-entry weights: entry `l` is `1/(2l+1)!` for `l = 0..=limit`.
pub fn odd_factorial_reciprocals(limit: usize) -> Vec<ExactRational> {
    let table = FactorialTable::new(limit);
    table
        .values
        .iter()
        .map(|f| ExactRational::new(BigInt::one(), f.clone()).expect("factorial is nonzero"))
        .collect()
}
