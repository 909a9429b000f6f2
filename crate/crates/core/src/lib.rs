//! Exact arithmetic for restricted m-ary partitions.
//!
//! A restricted m-ary partition of `n` writes `n` as a sum of powers of `m`
//! with no gaps: if `m^i` is a part then so are `1, m, ..., m^(i-1)`. This
//! crate counts them exactly ([`series`]), builds the binomial change-of-basis
//! integers `s[j][i]` ([`binom`]), implements the monomial valuation calculus
//! used to bound divisibility ([`symbolic`]) and checks the resulting
//! congruence family numerically ([`verify`]).

pub mod binom;
pub mod error;
pub mod modulus;
pub mod series;
pub mod symbolic;
pub mod verify;

pub use binom::{binomial, check_s_identity, h_coefficient, s_table, HBasisIndex, SCoeffTable};
pub use error::{Error, Result};
pub use modulus::{correction_factor, lemma_divisor, theorem_modulus};
pub use series::{
    brute_force_count, count_restricted, divide_by_one_minus_qk, restricted_series, PartitionSpec,
    SeriesCache, TruncatedSeries,
};
pub use symbolic::{
    closed_form_check, gap_check, lemma22_check, minimal_terms, substitute, theorem_divisor_check,
    val_exceeds, valuation, MinimalTermTable, SMonomial, Valuation,
};
pub use verify::{
    cross_check_recurrences, extract_subsequence, fit_lemma21, theorem_target, verify_theorem,
    CongruenceCase, HFitResult,
};
