//! Numeric verification of the congruence family and its h-basis structure.

mod fit;
mod linalg;
mod theorem;

pub use crate::modulus::theorem_modulus;
pub use fit::{cross_check_recurrences, fit_lemma21, fit_lemma21_on, min_holdout, HFitResult};
pub use linalg::{solve_exact, Solution};
pub use theorem::{
    extract_subsequence, extract_subsequence_on, max_n_within, required_trunc, theorem_target,
    verify_theorem, verify_theorem_on, CongruenceCase, DEFAULT_BUDGET,
};
