//! Recovering the h-basis decomposition of `a_j(n)` from partition data.
//!
//! The generating function of `a_j(n) = c_m(m^(j+2) n + ... + m^2)` is
//!
//! ```text
//! sum_{i=0}^{j+1} D[i] h_i  +  (C_m(q) - 1) * sum_{i=1}^{j+1} E[i] h_i
//! ```
//!
//! with `D[i] = P[j][i] - Q[j][i]` and `E[i] = R[j][i] - T[j][i]`. The
//! coefficient of `q^n` in `(C_m(q) - 1) h_i` is `sum_{k=1}^{n} c_m(k) C(n-k, i)`,
//! so every `n` gives one linear equation in the `2j + 3` unknowns.
//!
//! The weight on the second sum is `C_m(q) - 1`, not `1 - C_m(q)`: only with
//! this sign do the differences satisfy the `P`/`Q`/`R`/`T` recurrences that
//! [`cross_check_recurrences`] tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::linalg::{solve_exact, Solution};
use super::theorem::{check_budget, extract_subsequence_on, required_trunc};
use crate::binom::{binomial, SCoeffTable};
use crate::error::{invalid, Error, Result};
use crate::modulus::theorem_modulus;
use crate::series::{restricted_series, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HFitResult {
    pub m: u32,
    pub j: u32,
    /// `D[i]` for `i = 0..=j+1`.
    pub d: Vec<BigInt>,
    /// `E[i]` for `i = 1..=j+1`, stored at index `i - 1`.
    pub e: Vec<BigInt>,
    pub holdout_max: u64,
    /// Rows `n` whose equations determined the solution.
    pub solve_rows: Vec<usize>,
    pub holdout_verified: bool,
}

impl HFitResult {
    /// `D[i]`, zero outside `0..=j+1`.
    pub fn d_at(&self, i: u32) -> BigInt {
        self.d.get(i as usize).cloned().unwrap_or_default()
    }

    /// `E[i]`, zero outside `1..=j+1`.
    pub fn e_at(&self, i: u32) -> BigInt {
        match i {
            0 => BigInt::zero(),
            i => self.e.get(i as usize - 1).cloned().unwrap_or_default(),
        }
    }
}

/// Smallest holdout range accepted by the fit.
pub fn min_holdout(j: u32) -> u64 {
    4 * j as u64 + 8
}

/// Design matrix: row `n` holds `C(n, i)` for `i = 0..=j+1`, then
/// `sum_{k=1}^{n} c_m(k) C(n-k, i)` for `i = 1..=j+1`.
fn design_rows(series: &TruncatedSeries, j: u32, n_max: u64) -> Vec<Vec<BigInt>> {
    let c = series.coeffs();
    (0..=n_max)
        .map(|n| {
            let mut row: Vec<BigInt> = (0..=j + 1).map(|i| binomial(n, i as i64)).collect();
            row.extend((1..=j + 1).map(|i| {
                (1..=n)
                    .map(|k| &c[k as usize] * binomial(n - k, i as i64))
                    .sum::<BigInt>()
            }));
            row
        })
        .collect()
}

fn to_rational(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect()
}

/// Fits the decomposition against a precomputed `C_m(q)`.
///
/// Solves from rows `0..=2j+2`, extending one row at a time while the system
/// is rank deficient (small `n` only sees `c_m(k) = 1`). At least one row
/// must remain beyond the solve set; every row up to `holdout_max` is then
/// checked against the fitted model.
pub fn fit_lemma21_on(
    series: &TruncatedSeries,
    m: u32,
    j: u32,
    holdout_max: u64,
) -> Result<HFitResult> {
    if j == 0 {
        return Err(invalid("level j must be at least 1"));
    }
    if holdout_max < min_holdout(j) {
        return Err(invalid(format!(
            "holdout range {holdout_max} is below the minimum {} for j = {j}",
            min_holdout(j)
        )));
    }
    let modulus = theorem_modulus(m, j)?;
    let data = extract_subsequence_on(series, m, j, holdout_max)?;
    let rows = design_rows(series, j, holdout_max);
    let unknowns = 2 * j as usize + 3;

    let a = to_rational(&rows);
    let b: Vec<BigRational> = data
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .collect();
    let mut solved = None;
    for top in unknowns - 1..holdout_max as usize {
        match solve_exact(&a[..=top], &b[..=top]) {
            Solution::Unique { x, pivot_rows } => {
                solved = Some((x, pivot_rows));
                break;
            }
            Solution::RankDeficient { .. } => continue,
            Solution::Inconsistent => {
                return Err(Error::TheoremViolation(format!(
                    "rows 0..={top} admit no h-basis decomposition for m={m}, j={j}"
                )))
            }
        }
    }
    let Some((x, solve_rows)) = solved else {
        return Err(Error::DegenerateSystem {
            m,
            j,
            rows: holdout_max as usize,
        });
    };

    let coeffs = x
        .into_iter()
        .enumerate()
        .map(|(idx, v)| {
            if !v.is_integer() {
                return Err(Error::TheoremViolation(format!(
                    "coefficient {idx} = {v} is not an integer (m={m}, j={j})"
                )));
            }
            let v = v.to_integer();
            if !v.is_multiple_of(&modulus) {
                return Err(Error::TheoremViolation(format!(
                    "coefficient {idx} = {v} is not divisible by {modulus} (m={m}, j={j})"
                )));
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;

    let holdout_verified = rows.iter().zip(&data).all(|(row, want)| {
        let got: BigInt = row.iter().zip(&coeffs).map(|(r, c)| r * c).sum();
        &got == want
    });
    let (d, e) = coeffs.split_at(j as usize + 2);
    Ok(HFitResult {
        m,
        j,
        d: d.to_vec(),
        e: e.to_vec(),
        holdout_max,
        solve_rows,
        holdout_verified,
    })
}

/// Fits the decomposition, computing the series within `budget` coefficients.
pub fn fit_lemma21(m: u32, j: u32, holdout_max: u64, budget: usize) -> Result<HFitResult> {
    let trunc = required_trunc(m, j, holdout_max)?;
    check_budget(trunc, budget)?;
    fit_lemma21_on(&restricted_series(m, trunc)?, m, j, holdout_max)
}

/// Checks that the fit at level `j + 1` follows from the fit at level `j`:
///
/// ```text
/// E'[t] = sum_{i=t}^{j+2} E[i-1] s[i][t]
/// D'[t] = sum_{i=t}^{j+2} (D[i] + E[i-1]) s[i][t]      for 1 <= t <= j+2
/// ```
///
/// `D'[0]` is left out; it is tied to `P[j][1]` alone, which differences
/// cannot recover.
pub fn cross_check_recurrences(
    fit: &HFitResult,
    next: &HFitResult,
    table: &SCoeffTable,
) -> Result<bool> {
    if fit.m != next.m || fit.m != table.m() {
        return Err(invalid("fits and table must share the same base m"));
    }
    if next.j != fit.j + 1 {
        return Err(invalid(format!(
            "expected levels j and j+1, got {} and {}",
            fit.j, next.j
        )));
    }
    let top = fit.j + 2;
    if table.max_j() < top {
        return Err(invalid(format!("s-table needs rows up to {top}")));
    }
    let s = |i: u32, t: u32| table.get(i, t).expect("bounds checked above");
    Ok((1..=top).all(|t| {
        let e_next: BigInt = (t..=top).map(|i| fit.e_at(i - 1) * s(i, t)).sum();
        let d_next: BigInt = (t..=top)
            .map(|i| (fit.d_at(i) + fit.e_at(i - 1)) * s(i, t))
            .sum();
        e_next == next.e_at(t) && d_next == next.d_at(t)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binom::s_table;
    use crate::verify::theorem::DEFAULT_BUDGET;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn m2_level1() {
        let fit = fit_lemma21(2, 1, 30, DEFAULT_BUDGET).unwrap();
        assert!(fit.holdout_verified);
        assert_eq!(fit.d, ints(&[2, 8, 8]));
        assert_eq!(fit.e, ints(&[4, 8]));
        assert!(fit.d.iter().chain(&fit.e).all(|v| v.is_even()));
    }

    #[test]
    fn m3_level1() {
        let fit = fit_lemma21(3, 1, 30, DEFAULT_BUDGET).unwrap();
        assert!(fit.holdout_verified);
        assert!(fit
            .d
            .iter()
            .chain(&fit.e)
            .all(|v| v.is_multiple_of(&BigInt::from(3))));
    }

    #[test]
    fn top_columns_are_the_diagonal_product() {
        // D[j+1] = E[j+1] = s11 s22 ... s_{j+1,j+1} = m^((j+1)(j+2)/2)
        for (m, j) in [(2, 3), (3, 2), (4, 2)] {
            let fit = fit_lemma21(m, j, min_holdout(j), DEFAULT_BUDGET).unwrap();
            let want = num_traits::Pow::pow(BigInt::from(m), (j + 1) * (j + 2) / 2);
            assert_eq!(fit.d_at(j + 1), want);
            assert_eq!(fit.e_at(j + 1), want);
        }
    }

    #[test]
    fn needs_extra_rows_for_large_base() {
        let fit = fit_lemma21(6, 1, min_holdout(1), DEFAULT_BUDGET).unwrap();
        assert!(fit.holdout_verified);
        assert!(*fit.solve_rows.last().unwrap() > 6);
    }

    #[test]
    fn holdout_floor() {
        assert!(matches!(
            fit_lemma21(2, 1, 11, DEFAULT_BUDGET),
            Err(Error::InvalidArgument(_))
        ));
        assert!(fit_lemma21(2, 0, 30, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn recurrence_links_levels() {
        let table = s_table(2, 6).unwrap();
        let f1 = fit_lemma21(2, 1, 12, DEFAULT_BUDGET).unwrap();
        let f2 = fit_lemma21(2, 2, 16, DEFAULT_BUDGET).unwrap();
        assert!(cross_check_recurrences(&f1, &f2, &table).unwrap());

        let mut bad = f2.clone();
        bad.e[0] += 1;
        assert!(!cross_check_recurrences(&f1, &bad, &table).unwrap());
        assert!(cross_check_recurrences(&f2, &f1, &table).is_err());
    }

    #[test]
    fn recurrence_m3_levels_2_3() {
        let table = s_table(3, 6).unwrap();
        let f2 = fit_lemma21(3, 2, 16, DEFAULT_BUDGET).unwrap();
        let f3 = fit_lemma21(3, 3, 20, DEFAULT_BUDGET).unwrap();
        assert!(cross_check_recurrences(&f2, &f3, &table).unwrap());
    }

    #[test]
    fn opposite_sign_breaks_the_recurrence() {
        let table = s_table(2, 6).unwrap();
        let mut f1 = fit_lemma21(2, 1, 12, DEFAULT_BUDGET).unwrap();
        let mut f2 = fit_lemma21(2, 2, 16, DEFAULT_BUDGET).unwrap();
        for e in f1.e.iter_mut().chain(f2.e.iter_mut()) {
            *e = -e.clone();
        }
        assert!(!cross_check_recurrences(&f1, &f2, &table).unwrap());
    }
}
