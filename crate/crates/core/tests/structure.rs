//! Cross-module checks: minimal terms against fitted coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use rmary_core::symbolic::TermKind;
use rmary_core::verify::{fit_lemma21, min_holdout, DEFAULT_BUDGET};
use rmary_core::{
    cross_check_recurrences, minimal_terms, s_table, substitute, theorem_divisor_check,
    theorem_modulus,
};

#[test]
fn bottleneck_monomial_clears_the_modulus() {
    for m in 2..=6 {
        for j in 1..=4 {
            let table = s_table(m, j + 2).unwrap();
            let terms = minimal_terms(j).unwrap();
            let value = substitute(terms.q_bar(1).unwrap(), &table).unwrap();
            assert!(
                value.is_multiple_of(&theorem_modulus(m, j).unwrap()),
                "m={m} j={j}"
            );
        }
    }
}

#[test]
fn divisor_check_on_every_stored_term() {
    for j in 1..=12 {
        let terms = minimal_terms(j).unwrap();
        for m in 2..=9 {
            for (kind, i, p) in terms.terms() {
                assert!(
                    theorem_divisor_check(p, j, m).unwrap(),
                    "{kind}[{j}][{i}] = {p} at m={m}"
                );
            }
        }
    }
}

#[test]
fn fitted_top_column_is_the_minimal_r_term() {
    // R[j][j+1] has a single monomial and T[j][j+1] vanishes, so E[j+1] is
    // exactly the substituted minimal term.
    for m in 2..=4 {
        for j in 1..=3 {
            let fit = fit_lemma21(m, j, min_holdout(j), DEFAULT_BUDGET).unwrap();
            let table = s_table(m, j + 1).unwrap();
            let terms = minimal_terms(j).unwrap();
            let r_top = substitute(terms.get(TermKind::R, j + 1).unwrap(), &table).unwrap();
            assert_eq!(fit.e_at(j + 1), r_top);
            assert_eq!(fit.d_at(j + 1), r_top);
        }
    }
}

#[test]
fn consecutive_fits_chain() {
    let m = 4;
    let table = s_table(m, 6).unwrap();
    let fits: Vec<_> = (1..=3)
        .map(|j| fit_lemma21(m, j, min_holdout(j), DEFAULT_BUDGET).unwrap())
        .collect();
    for pair in fits.windows(2) {
        assert!(cross_check_recurrences(&pair[0], &pair[1], &table).unwrap());
    }
    assert_eq!(fits[0].d_at(0), BigInt::from(4));
}
