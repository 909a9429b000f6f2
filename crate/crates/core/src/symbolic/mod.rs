//! Monomials in the indeterminates `s[u,v]` and their valuation.
//!
//! The valuation `v` assigns `s[j,j] -> j`, `s[j,j-1] -> j - 1 - ε` and zero
//! to every other `s[j,i]`, with `ε` a positive infinitesimal. A monomial
//! whose valuation exceeds `ℓ` evaluates to a multiple of
//! `m^(ℓ+1) / c_(ℓ+2)` once the `s[u,v]` are replaced by the integers of
//! [`crate::binom::s_table`].

mod minimal;
mod monomial;
mod valuation;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};

pub use minimal::{
    closed_form_check, closed_form_p, closed_form_q, gap_check, minimal_terms, MinimalTermTable,
    TermKind,
};
pub use monomial::SMonomial;
pub use valuation::{val_exceeds, valuation, Valuation, ValuationDelta};

use crate::binom::{s_table, SCoeffTable};
use crate::error::{invalid, Result};
use crate::modulus::{lemma_divisor, theorem_modulus};

/// Evaluates `p` with every `s[u,v]` replaced by the table entry.
pub fn substitute(p: &SMonomial, table: &SCoeffTable) -> Result<BigInt> {
    let mut acc = BigInt::one();
    for ((u, v), e) in p.iter() {
        let value = table.get(u, v).ok_or_else(|| {
            invalid(format!(
                "s[{u},{v}] is outside a table with max_j = {}",
                table.max_j()
            ))
        })?;
        acc *= Pow::pow(value, e);
    }
    Ok(acc)
}

fn table_for(p: &SMonomial, m: u32) -> Result<SCoeffTable> {
    s_table(m, p.max_row().max(1))
}

/// Checks that `p`, evaluated at base `m`, is divisible by
/// `m^(ℓ+1) / c_(ℓ+2)`. Requires `v(p) > ℓ`.
pub fn lemma22_check(p: &SMonomial, m: u32, ell: i64) -> Result<bool> {
    let v = valuation(p);
    if !v.exceeds(ell) {
        return Err(invalid(format!(
            "valuation {v} of {p} does not exceed {ell}"
        )));
    }
    let divisor = lemma_divisor(m, ell)?;
    let value = substitute(p, &table_for(p, m)?)?;
    Ok(value.is_multiple_of(&divisor))
}

/// Checks `m^j / c_j | p` the way the congruence proof does: peel off one
/// `s[1,1] = m` and bound the rest by `m^(j-1) / c_j` through its valuation.
pub fn theorem_divisor_check(p: &SMonomial, j: u32, m: u32) -> Result<bool> {
    if j == 0 {
        return Err(invalid("level j must be at least 1"));
    }
    let rest = p
        .without_factor(1, 1)
        .ok_or_else(|| invalid(format!("{p} has no s[1,1] factor")))?;
    let ell = j as i64 - 2;
    let v = valuation(&rest);
    if !v.exceeds(ell) {
        return Err(invalid(format!(
            "valuation {v} of {rest} does not exceed {ell}"
        )));
    }
    let table = table_for(p, m)?;
    let head = table.get(1, 1).expect("row 1 always present");
    let rest_value = substitute(&rest, &table)?;
    // m^(j-1)/c_j: for even m this is (m/2)^(j-1), for odd m it is m^(j-1).
    let rest_divisor = theorem_modulus(m, j)? / m;
    let whole = head * &rest_value;
    Ok(rest_value.is_multiple_of(&rest_divisor) && whole.is_multiple_of(&theorem_modulus(m, j)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(pairs: &[((u32, u32), u32)]) -> SMonomial {
        SMonomial::from_exponents(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn substitution_examples() {
        let t2 = s_table(2, 3).unwrap();
        let t3 = s_table(3, 3).unwrap();
        assert_eq!(substitute(&SMonomial::one(), &t2).unwrap(), BigInt::one());
        assert_eq!(
            substitute(&mono(&[((1, 1), 1), ((2, 1), 1)]), &t2).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(
            substitute(&mono(&[((2, 2), 1)]), &t3).unwrap(),
            BigInt::from(9)
        );
        assert!(substitute(&mono(&[((5, 5), 1)]), &t3).is_err());
    }

    #[test]
    fn lemma22_examples() {
        assert!(lemma22_check(&mono(&[((1, 1), 1)]), 3, 0).unwrap());
        assert!(lemma22_check(&mono(&[((2, 1), 1)]), 2, 0).unwrap());
        assert!(lemma22_check(&mono(&[((1, 1), 1), ((2, 1), 2)]), 2, 2).unwrap());
        // hypothesis fails: v(s[1,1]) = 1 is not > 1
        assert!(lemma22_check(&mono(&[((1, 1), 1)]), 3, 1).is_err());
    }

    #[test]
    fn theorem_divisor_examples() {
        let p = mono(&[((1, 1), 1), ((2, 1), 2)]);
        assert!(theorem_divisor_check(&p, 3, 2).unwrap());
        assert!(theorem_divisor_check(&p, 3, 3).unwrap());
        // 3 * 6^2 = 108 = 4 * 27
        assert_eq!(
            substitute(&p, &s_table(3, 2).unwrap()).unwrap(),
            BigInt::from(108)
        );
        assert!(theorem_divisor_check(&mono(&[((1, 1), 1)]), 1, 5).unwrap());
    }

    #[test]
    fn theorem_divisor_preconditions() {
        assert!(theorem_divisor_check(&mono(&[((2, 1), 3)]), 2, 3).is_err());
        // s[1,1] s[3,1]^5: the rest has valuation 0, not > 1
        assert!(theorem_divisor_check(&mono(&[((1, 1), 1), ((3, 1), 5)]), 3, 3).is_err());
    }
}
