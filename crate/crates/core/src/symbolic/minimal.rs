//! Minimal-valuation terms of the polynomials `P`, `Q`, `R`, `T`.
//!
//! Level 1 is seeded with `P̄ = R̄ = [s11*s21, s11*s22]` and
//! `Q̄ = T̄ = [s11]`; each further level follows
//!
//! ```text
//! X̄[j+1][1] = Ȳ[j][1] * s[2,1]
//! X̄[j+1][i] = Ȳ[j][i-1] * s[i,i]      (2 <= i)
//! ```
//!
//! with `Ȳ = R̄` for `X ∈ {P, R}` and `Ȳ = T̄` for `X ∈ {Q, T}`. `P̄`/`R̄`
//! have columns `1..=j+1`. `Q̄`/`T̄` have columns `1..=j`: `Q[j][j+1]` and
//! `T[j][j+1]` vanish, so they carry no minimal term.

use std::fmt;

use super::{valuation, SMonomial};
use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TermKind {
    P,
    Q,
    R,
    T,
}

impl fmt::Display for TermKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TermKind::P => "P",
            TermKind::Q => "Q",
            TermKind::R => "R",
            TermKind::T => "T",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalTermTable {
    j: u32,
    p_bar: Vec<SMonomial>,
    q_bar: Vec<SMonomial>,
    r_bar: Vec<SMonomial>,
    t_bar: Vec<SMonomial>,
}

fn s(u: u32, v: u32) -> SMonomial {
    SMonomial::var(u, v).expect("indices are in range")
}

/// `s[1,1] s[2,2] ... s[i,i]`.
fn diagonal_product(i: u32) -> SMonomial {
    (1..=i).fold(SMonomial::one(), |acc, t| &acc * &s(t, t))
}

fn advance(prev: &[SMonomial], columns: u32) -> Vec<SMonomial> {
    (1..=columns)
        .map(|i| {
            if i == 1 {
                &prev[0] * &s(2, 1)
            } else {
                &prev[i as usize - 2] * &s(i, i)
            }
        })
        .collect()
}

impl MinimalTermTable {
    fn base() -> Self {
        let r = vec![&s(1, 1) * &s(2, 1), &s(1, 1) * &s(2, 2)];
        let t = vec![s(1, 1)];
        Self {
            j: 1,
            p_bar: r.clone(),
            q_bar: t.clone(),
            r_bar: r,
            t_bar: t,
        }
    }

    fn next(&self) -> Self {
        let j = self.j + 1;
        Self {
            j,
            p_bar: advance(&self.r_bar, j + 1),
            r_bar: advance(&self.r_bar, j + 1),
            q_bar: advance(&self.t_bar, j),
            t_bar: advance(&self.t_bar, j),
        }
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    fn column(&self, kind: TermKind) -> &[SMonomial] {
        match kind {
            TermKind::P => &self.p_bar,
            TermKind::Q => &self.q_bar,
            TermKind::R => &self.r_bar,
            TermKind::T => &self.t_bar,
        }
    }

    /// The minimal term of `kind` at column `i` (1-based).
    pub fn get(&self, kind: TermKind, i: u32) -> Option<&SMonomial> {
        self.column(kind).get((i as usize).checked_sub(1)?)
    }

    pub fn p_bar(&self, i: u32) -> Option<&SMonomial> {
        self.get(TermKind::P, i)
    }

    pub fn q_bar(&self, i: u32) -> Option<&SMonomial> {
        self.get(TermKind::Q, i)
    }

    pub fn r_bar(&self, i: u32) -> Option<&SMonomial> {
        self.get(TermKind::R, i)
    }

    pub fn t_bar(&self, i: u32) -> Option<&SMonomial> {
        self.get(TermKind::T, i)
    }

    /// Number of stored columns for `kind`.
    pub fn columns(&self, kind: TermKind) -> u32 {
        self.column(kind).len() as u32
    }

    /// All stored terms as `(kind, column, monomial)`.
    pub fn terms(&self) -> impl Iterator<Item = (TermKind, u32, &SMonomial)> + '_ {
        [TermKind::P, TermKind::Q, TermKind::R, TermKind::T]
            .into_iter()
            .flat_map(move |k| {
                self.column(k)
                    .iter()
                    .enumerate()
                    .map(move |(i, m)| (k, i as u32 + 1, m))
            })
    }

    /// `P̄ = R̄` and `Q̄ = T̄` column by column.
    pub fn pairs_agree(&self) -> bool {
        self.p_bar == self.r_bar && self.q_bar == self.t_bar
    }

    pub fn matches_closed_form(&self) -> bool {
        let j = self.j;
        self.pairs_agree()
            && self.p_bar.len() == j as usize + 1
            && self.q_bar.len() == j as usize
            && (1..=j + 1).all(|i| self.p_bar(i) == Some(&closed_form_p(j, i)))
            && (1..=j).all(|i| self.q_bar(i) == Some(&closed_form_q(j, i)))
    }

    /// `v(X̄[i+1]) - v(X̄[i]) > i` over every stored adjacent pair.
    pub fn gaps_hold(&self) -> bool {
        let gaps = |col: &[SMonomial]| {
            col.windows(2).enumerate().all(|(idx, w)| {
                let i = idx as i64 + 1;
                (valuation(&w[1]) - valuation(&w[0])).exceeds(i)
            })
        };
        gaps(&self.p_bar) && gaps(&self.r_bar) && gaps(&self.q_bar) && gaps(&self.t_bar)
    }

    /// The single monomial of least valuation among all stored terms, if
    /// that minimum is attained by only one monomial.
    pub fn overall_minimum(&self) -> Option<&SMonomial> {
        let (_, _, first) = self.terms().min_by_key(|(_, _, m)| valuation(m))?;
        let least = valuation(first);
        let unique = self
            .terms()
            .filter(|(_, _, m)| valuation(m) == least)
            .all(|(_, _, m)| m == first);
        unique.then_some(first)
    }
}

/// `s[1,1] s[2,2] ... s[i,i] s[2,1]^(j-i+1)`.
pub fn closed_form_p(j: u32, i: u32) -> SMonomial {
    &diagonal_product(i) * &SMonomial::power(2, 1, j + 1 - i).expect("valid index")
}

/// `s[1,1] s[2,2] ... s[i,i] s[2,1]^(j-i)` for `i <= j`.
pub fn closed_form_q(j: u32, i: u32) -> SMonomial {
    &diagonal_product(i) * &SMonomial::power(2, 1, j - i).expect("valid index")
}

/// The minimal-term table at level `j >= 1`.
pub fn minimal_terms(j: u32) -> Result<MinimalTermTable> {
    if j == 0 {
        return Err(invalid("minimal terms start at level j = 1"));
    }
    let mut table = MinimalTermTable::base();
    while table.j < j {
        table = table.next();
    }
    Ok(table)
}

pub fn closed_form_check(j: u32) -> Result<bool> {
    Ok(minimal_terms(j)?.matches_closed_form())
}

pub fn gap_check(j: u32) -> Result<bool> {
    Ok(minimal_terms(j)?.gaps_hold())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::Valuation;

    fn mono(pairs: &[((u32, u32), u32)]) -> SMonomial {
        SMonomial::from_exponents(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn level_one() {
        let t = minimal_terms(1).unwrap();
        assert_eq!(t.p_bar(1), Some(&mono(&[((1, 1), 1), ((2, 1), 1)])));
        assert_eq!(t.p_bar(2), Some(&mono(&[((1, 1), 1), ((2, 2), 1)])));
        assert_eq!(t.q_bar(1), Some(&s(1, 1)));
        assert_eq!(t.q_bar(2), None);
        assert_eq!(t.p_bar(0), None);
    }

    #[test]
    fn level_three_entries() {
        let t = minimal_terms(3).unwrap();
        assert_eq!(
            t.p_bar(2),
            Some(&mono(&[((1, 1), 1), ((2, 2), 1), ((2, 1), 2)]))
        );
        assert_eq!(t.q_bar(1), Some(&mono(&[((1, 1), 1), ((2, 1), 2)])));
        assert_eq!(
            t.p_bar(4).unwrap().to_string(),
            "s[1,1]*s[2,2]*s[3,3]*s[4,4]"
        );
    }

    #[test]
    fn level_two_top_column() {
        let t = minimal_terms(2).unwrap();
        assert_eq!(
            t.p_bar(3),
            Some(&mono(&[((1, 1), 1), ((2, 2), 1), ((3, 3), 1)]))
        );
        assert!(t.matches_closed_form());
    }

    #[test]
    fn rejects_level_zero() {
        assert!(minimal_terms(0).is_err());
        assert!(closed_form_check(0).is_err());
    }

    #[test]
    fn closed_forms_and_gaps() {
        assert!(closed_form_check(1).unwrap());
        assert!(closed_form_check(2).unwrap());
        assert!(closed_form_check(40).unwrap());
        assert!(gap_check(1).unwrap());
        assert!(gap_check(5).unwrap());
    }

    #[test]
    fn level_one_gap_is_one_plus_eps() {
        let t = minimal_terms(1).unwrap();
        let d = valuation(t.p_bar(2).unwrap()) - valuation(t.p_bar(1).unwrap());
        assert_eq!((d.int_part, d.eps), (1, -1));
    }

    #[test]
    fn swapped_columns_break_the_gap() {
        let mut t = minimal_terms(3).unwrap();
        t.p_bar.swap(0, 1);
        assert!(!t.gaps_hold());
        assert!(!t.matches_closed_form());
    }

    #[test]
    fn degrees_follow_levels() {
        for j in 1..=10 {
            let t = minimal_terms(j).unwrap();
            for (kind, _, m) in t.terms() {
                let want = match kind {
                    TermKind::P | TermKind::R => j as u64 + 1,
                    TermKind::Q | TermKind::T => j as u64,
                };
                assert_eq!(m.degree(), want, "{kind} at level {j}: {m}");
            }
        }
    }

    #[test]
    fn overall_minimum_is_q_bar_one() {
        for j in 1..=40 {
            let t = minimal_terms(j).unwrap();
            let expected = mono(&[((1, 1), 1), ((2, 1), j - 1)]);
            assert_eq!(t.overall_minimum(), Some(&expected));
            assert_eq!(valuation(&expected), Valuation::new(j as i64, j as u64 - 1));
        }
    }
}
