//! Truncated power series and the generating function of `c_m(n)`.
//!
//! `C_m(q) = 1 + sum_{L>=0} q^(1+m+...+m^L) / ((1-q)(1-q^m)...(1-q^(m^L)))`
//!
//! The level terms are built incrementally: the level `L+1` term is the level
//! `L` term shifted by `m^(L+1)` and divided by `1 - q^(m^(L+1))`, so each level
//! costs one shift and one stride prefix sum.

mod cache;
mod oracle;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

pub use cache::{SeriesCache, CACHE_FORMAT_VERSION};
pub use oracle::{brute_force_count, enumerate_partitions, ENUMERATION_LIMIT, ORACLE_LIMIT};

/// A power series known modulo `q^trunc`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(invalid("truncation order must be at least 1"));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(trunc: usize) -> Result<Self> {
        Self::from_coeffs(vec![BigInt::zero(); trunc])
    }

    pub fn one(trunc: usize) -> Result<Self> {
        Self::monomial(0, trunc)
    }

    /// `q^k` truncated at `trunc` (zero if `k >= trunc`).
    pub fn monomial(k: usize, trunc: usize) -> Result<Self> {
        let mut s = Self::zero(trunc)?;
        if k < trunc {
            s.coeffs[k] = BigInt::one();
        }
        Ok(s)
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`, or `None` when `n` is beyond the truncation.
    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    /// The first `trunc` coefficients.
    pub fn prefix(&self, trunc: usize) -> Result<Self> {
        if trunc > self.trunc() {
            return Err(invalid(format!(
                "prefix of length {trunc} requested from a series truncated at {}",
                self.trunc()
            )));
        }
        Self::from_coeffs(self.coeffs[..trunc].to_vec())
    }

    /// Multiply by `q^k` in place.
    pub fn shift_in_place(&mut self, k: usize) {
        let n = self.coeffs.len();
        if k >= n {
            self.coeffs.iter_mut().for_each(|c| c.set_zero());
            return;
        }
        self.coeffs.rotate_right(k);
        self.coeffs[..k].iter_mut().for_each(|c| c.set_zero());
    }

    /// Divide by `1 - q^k` in place: `t[i] = s[i] + t[i-k]`.
    pub fn divide_by_one_minus_qk_in_place(&mut self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(invalid("cannot divide by 1 - q^0"));
        }
        for i in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - k];
        }
        Ok(())
    }

    /// Multiply by `1 - q^k` in place.
    pub fn mul_one_minus_qk_in_place(&mut self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(invalid("1 - q^0 is zero"));
        }
        for i in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - k];
        }
        Ok(())
    }

    fn check_same_trunc(&self, other: &Self) {
        assert_eq!(
            self.trunc(),
            other.trunc(),
            "series arithmetic needs matching truncation orders"
        );
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries")
            .field("trunc", &self.trunc())
            .field(
                "coeffs",
                &self
                    .coeffs
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_trunc(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl AddAssign<&TruncatedSeries> for TruncatedSeries {
    fn add_assign(&mut self, rhs: &TruncatedSeries) {
        self.check_same_trunc(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_trunc(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Schoolbook product, truncated.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_trunc(rhs);
        let n = self.trunc();
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

/// Returns `t` with `t * (1 - q^k) = s` modulo `q^trunc`.
pub fn divide_by_one_minus_qk(s: &TruncatedSeries, k: usize) -> Result<TruncatedSeries> {
    let mut t = s.clone();
    t.divide_by_one_minus_qk_in_place(k)?;
    Ok(t)
}

/// A base `m >= 2` together with a target `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartitionSpec {
    m: u32,
    n: usize,
}

impl PartitionSpec {
    pub fn new(m: u32, n: usize) -> Result<Self> {
        check_base(m)?;
        Ok(Self { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

pub(crate) fn check_base(m: u32) -> Result<()> {
    if m < 2 {
        return Err(invalid(format!("base m must be >= 2, got {m}")));
    }
    Ok(())
}

/// `C_m(q)` modulo `q^trunc`; the coefficient of `q^n` is `c_m(n)`.
pub fn restricted_series(m: u32, trunc: usize) -> Result<TruncatedSeries> {
    check_base(m)?;
    let mut total = TruncatedSeries::one(trunc)?;

    // Level 0: q / (1 - q).
    let mut term = TruncatedSeries::monomial(1, trunc)?;
    term.divide_by_one_minus_qk_in_place(1)?;
    let mut sigma: usize = 1;
    let mut power: usize = 1;
    while sigma < trunc {
        total += &term;
        power = match power.checked_mul(m as usize) {
            Some(p) => p,
            None => break,
        };
        sigma = match sigma.checked_add(power) {
            Some(s) => s,
            None => break,
        };
        if sigma >= trunc {
            break;
        }
        term.shift_in_place(power);
        term.divide_by_one_minus_qk_in_place(power)?;
    }
    Ok(total)
}

/// `c_m(n)` read off the generating function.
pub fn count_restricted(spec: PartitionSpec) -> BigInt {
    let series = restricted_series(spec.m(), spec.n() + 1)
        .expect("a validated PartitionSpec always yields a series");
    series.coeffs[spec.n()].clone()
}
