//! Exact elimination over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// The unique solution, plus the indices of the rows used as pivots.
    Unique {
        x: Vec<BigRational>,
        pivot_rows: Vec<usize>,
    },
    RankDeficient {
        rank: usize,
    },
    /// The rows have full column rank but contradict each other.
    Inconsistent,
}

/// Solves `A x = b` by Gauss-Jordan elimination, pivoting on the first row
/// (in input order) with a nonzero entry in each column.
pub fn solve_exact(a: &[Vec<BigRational>], b: &[BigRational]) -> Solution {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let cols = a.first().map_or(0, Vec::len);
    let mut rows: Vec<(usize, Vec<BigRational>)> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(idx, (row, rhs))| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            (idx, r)
        })
        .collect();

    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r].1[col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].1[col].clone();
        rows[rank].1.iter_mut().for_each(|v| *v /= &pivot);
        let pivot_row = rows[rank].1.clone();
        for (r, (_, row)) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        rank += 1;
    }

    if rank < cols {
        return Solution::RankDeficient { rank };
    }
    if rows[rank..].iter().any(|(_, r)| !r[cols].is_zero()) {
        return Solution::Inconsistent;
    }
    let x = rows[..cols].iter().map(|(_, r)| r[cols].clone()).collect();
    let mut pivot_rows: Vec<usize> = rows[..cols].iter().map(|(idx, _)| *idx).collect();
    pivot_rows.sort_unstable();
    Solution::Unique { x, pivot_rows }
}
