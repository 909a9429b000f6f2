//! Binomial coefficients and the change-of-basis integers `s[j][i]`.
//!
//! For a fixed base `m` the integers `s[j][i]` are defined by
//!
//! ```text
//! C(k*m + 1, j) = sum_{i=0}^{j} s[j][i] * C(k, i)      for all k >= 0.
//! ```
//!
//! Both sides are polynomials of degree `j` in `k`, so the identity at
//! `k = 0..=j` determines the row. At `k = t` every `C(t, i)` with `i > t`
//! vanishes, which makes the system lower triangular.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{invalid, Error, Result};
use crate::series::check_base;

/// Exact `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Index `i` of the basis series `h_i = q^i / (1-q)^(i+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HBasisIndex(pub u32);

/// Coefficient of `q^n` in `h_i`, which is `C(n, i)`.
pub fn h_coefficient(i: HBasisIndex, n: u64) -> BigInt {
    binomial(n, i.0 as i64)
}

/// Triangular table `s[j][i]` for `0 <= i <= j <= max_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct SCoeffTable {
    m: u32,
    rows: Vec<Vec<BigInt>>,
}

impl SCoeffTable {
    /// Wraps precomputed rows; only the triangular shape is checked.
    pub fn from_rows(m: u32, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        check_base(m)?;
        if rows.is_empty() {
            return Err(invalid("table needs at least row 0"));
        }
        if let Some(j) = rows.iter().enumerate().position(|(j, r)| r.len() != j + 1) {
            return Err(invalid(format!("row {j} must have {} entries", j + 1)));
        }
        Ok(Self { m, rows })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn max_j(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, j: u32, i: u32) -> Option<&BigInt> {
        self.rows.get(j as usize)?.get(i as usize)
    }

    pub fn set(&mut self, j: u32, i: u32, value: BigInt) -> Result<()> {
        let slot = self
            .rows
            .get_mut(j as usize)
            .and_then(|r| r.get_mut(i as usize))
            .ok_or_else(|| invalid(format!("s[{j}][{i}] is outside the table")))?;
        *slot = value;
        Ok(())
    }
}

impl fmt::Debug for SCoeffTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        f.debug_struct("SCoeffTable")
            .field("m", &self.m)
            .field("rows", &rows)
            .finish()
    }
}

/// Builds `s[j][i]` for `j <= max_j` by forward substitution at `k = 0..=j`.
pub fn s_table(m: u32, max_j: u32) -> Result<SCoeffTable> {
    check_base(m)?;
    if max_j < 1 {
        return Err(invalid("max_j must be at least 1"));
    }
    let rows = (0..=max_j as u64)
        .map(|j| solve_row(m as u64, j))
        .collect::<Result<Vec<_>>>()?;
    SCoeffTable::from_rows(m, rows)
}

fn solve_row(m: u64, j: u64) -> Result<Vec<BigInt>> {
    let mut row: Vec<BigRational> = Vec::with_capacity(j as usize + 1);
    for t in 0..=j {
        // C(tm+1, j) = sum_{i<=t} s[j][i] C(t, i)
        let mut rhs = BigRational::from_integer(binomial(t * m + 1, j as i64));
        for (i, s) in row.iter().enumerate() {
            rhs -= s * BigRational::from_integer(binomial(t, i as i64));
        }
        let pivot = BigRational::from_integer(binomial(t, t as i64));
        row.push(rhs / pivot);
    }
    row.into_iter()
        .enumerate()
        .map(|(i, s)| {
            if s.is_integer() {
                Ok(s.to_integer())
            } else {
                Err(Error::Inconsistency(format!(
                    "s[{j}][{i}] = {s} is not an integer"
                )))
            }
        })
        .collect()
}

/// Whether the defining identity holds at `k` for every row of the table.
pub fn check_s_identity(table: &SCoeffTable, k: u64) -> bool {
    let m = table.m() as u64;
    let Some(arg) = k.checked_mul(m).and_then(|v| v.checked_add(1)) else {
        return false;
    };
    table.rows().iter().enumerate().all(|(j, row)| {
        let rhs: BigInt = row
            .iter()
            .enumerate()
            .map(|(i, s)| s * binomial(k, i as i64))
            .sum();
        binomial(arg, j as i64) == rhs
    })
}

/// `s[i][i] = m^i`.
pub fn diagonal_closed_form(m: u32, i: u32) -> BigInt {
    BigInt::from(m).pow(i)
}

/// `s[i+1][i] = i(m-1)/2 * m^i + m^i`. The product `i(m-1)m^i` is always even.
pub fn subdiagonal_closed_form(m: u32, i: u32) -> BigInt {
    let mi = BigInt::from(m).pow(i);
    let twice = BigInt::from(i) * (m - 1) * &mi;
    debug_assert!(twice.is_even());
    twice / 2 + mi
}
