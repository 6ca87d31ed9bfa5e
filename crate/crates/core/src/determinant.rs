//! The determinant sequence `D_k`, computed two independent ways.
//!
//! Production path: the linear recurrence
//! `D_k = sum_{l=1..k} (-1)^(l-1) D_{k-l} / (2l+1)!` with `D_0 = 1`,
//! an O(K^2) pass of exact multiply-adds.
//!
//! Oracle path: build the explicit lower-Hessenberg matrix (odd-factorial
//! reciprocals on and above the diagonal, unit subdiagonal, zeros below)
//! and evaluate its determinant by fraction-free Bareiss elimination over
//! an integer lift. The two paths share no algorithmic structure, so
//! exact agreement is meaningful evidence.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{odd_factorial_reciprocals, FactorialTable};
use crate::rational::ExactRational;

/// Exact values `D_0..=D_K`, with `D_0 = 1`.
#[derive(Debug, Clone)]
pub struct DeterminantSequence {
    values: Vec<ExactRational>,
    reciprocals: Vec<ExactRational>,
}

impl DeterminantSequence {
    /// Computes `D_0..=D_max_index` by the recurrence.
    pub fn new(max_index: usize) -> Self {
        let mut seq = Self {
            values: vec![ExactRational::one()],
            reciprocals: odd_factorial_reciprocals(max_index),
        };
        seq.extend_to(max_index);
        seq
    }

    /// Extends the sequence to `max_index`, reusing the stored prefix.
    pub fn extend_to(&mut self, max_index: usize) {
        if self.reciprocals.len() <= max_index {
            self.reciprocals = odd_factorial_reciprocals(max_index);
        }
        for k in self.values.len()..=max_index {
            let mut acc = ExactRational::zero();
            for l in 1..=k {
                let term = &self.values[k - l] * &self.reciprocals[l];
                acc = if l % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            self.values.push(acc);
        }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// `D_k`. Panics when `k` exceeds the computed range.
    pub fn value(&self, k: usize) -> &ExactRational {
        &self.values[k]
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    /// Wraps raw values without recomputation or checks. Intended for
    /// negative-path tests and the CLI corruption hook; a sequence built
    /// this way need not satisfy the recurrence.
    pub fn from_values(values: Vec<ExactRational>) -> Self {
        assert!(!values.is_empty());
        let reciprocals = odd_factorial_reciprocals(values.len() - 1);
        Self { values, reciprocals }
    }

    /// The residual `sum_{l=0..k} (-1)^l D_{k-l} / (2l+1)!`.
    ///
    /// Exactly zero certifies entry `k` against its predecessors; a
    /// corrupted entry yields a nonzero residual.
    pub fn convolution_residual(&self, k: usize) -> ExactRational {
        assert!(k >= 1 && k <= self.max_index(), "k out of range");
        let mut acc = ExactRational::zero();
        for l in 0..=k {
            let term = &self.values[k - l] * &self.reciprocals[l];
            acc = if l % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
}

/// The explicit k-by-k matrix behind `D_k`.
///
/// Entry law (1-based indices): `a(i,j) = 1/(2(j-i)+3)!` for `j >= i`,
/// `a(i,j) = 1` for `i = j+1`, and `a(i,j) = 0` for `i > j+1`. The first
/// row reads `1/3!, 1/5!, 1/7!, ...` and each later row is the previous
/// one shifted right with a leading 1.
#[derive(Debug, Clone)]
pub struct HessenbergMatrix {
    order: usize,
    entries: Vec<ExactRational>, // row-major
}

impl HessenbergMatrix {
    /// Builds the order-`k` matrix. Requires `k >= 1`.
    pub fn build(k: usize) -> Self {
        assert!(k >= 1, "order must be >= 1");
        let weights = odd_factorial_reciprocals(k);
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let e = if j >= i {
                    weights[j - i + 1].clone()
                } else if i == j + 1 {
                    ExactRational::one()
                } else {
                    ExactRational::zero()
                };
                entries.push(e);
            }
        }
        Self { order: k, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &ExactRational {
        &self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[ExactRational] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    /// Exact determinant by fraction-free elimination, independent of the
    /// recurrence path.
    ///
    /// Each row is scaled by `(2k+1)!` (the largest denominator present),
    /// which lifts the matrix to integers; the integer determinant is then
    /// divided by `((2k+1)!)^k`.
    pub fn det_fraction_free(&self) -> ExactRational {
        let k = self.order;
        let table = FactorialTable::new(k);
        let scale = table.odd_factorial(k); // (2k+1)!
        let lifted: Vec<Vec<BigInt>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let e = self.entry(i, j);
                        // scale / den is exact: every denominator divides (2k+1)!
                        e.numerator() * (scale / e.denominator())
                    })
                    .collect()
            })
            .collect();
        let det_int = bareiss_determinant(lifted);
        let divisor = num_traits::Pow::pow(scale, k);
        ExactRational::new(det_int, divisor).expect("scale is nonzero")
    }
}

/// Fraction-free (Bareiss) determinant of a dense integer matrix.
///
/// Row pivoting handles zero pivots; every interior division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for step in 0..n - 1 {
        if m[step][step].is_zero() {
            match (step + 1..n).find(|&r| !m[r][step].is_zero()) {
                Some(r) => {
                    m.swap(step, r);
                    sign = -sign;
                }
                None => return BigInt::zero(), // whole column zero
            }
        }
        for i in step + 1..n {
            for j in step + 1..n {
                let num = &m[step][step] * &m[i][j] - &m[i][step] * &m[step][j];
                m[i][j] = num / &prev; // exact by the Bareiss identity
            }
            m[i][step] = BigInt::zero();
        }
        prev = m[step][step].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
