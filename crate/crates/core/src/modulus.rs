//! The moduli appearing in the congruence family and its divisibility lemma.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::error::{invalid, Result};

/// `c_j`: 1 for odd `m`, `2^(j-1)` for even `m`. Defined for `j >= 1`.
pub fn correction_factor(m: u32, j: u32) -> Result<BigInt> {
    if j == 0 {
        return Err(invalid("correction factor c_j is undefined for j = 0"));
    }
    Ok(if m % 2 == 1 {
        BigInt::one()
    } else {
        BigInt::one() << (j - 1)
    })
}

/// `m^j / c_j`, the modulus of the congruence at level `j`.
pub fn theorem_modulus(m: u32, j: u32) -> Result<BigInt> {
    if m < 2 {
        return Err(invalid(format!("base m must be >= 2, got {m}")));
    }
    let c = correction_factor(m, j)?;
    Ok(BigInt::from(m).pow(j) / c)
}

/// `m^(ell+1) / c_(ell+2)`, the divisor guaranteed for a monomial whose
/// valuation exceeds `ell`. Only integral for `ell >= -1`.
pub fn lemma_divisor(m: u32, ell: i64) -> Result<BigInt> {
    if m < 2 {
        return Err(invalid(format!("base m must be >= 2, got {m}")));
    }
    if ell < -1 {
        return Err(invalid(format!(
            "divisor m^(l+1)/c_(l+2) is not an integer for l = {ell}"
        )));
    }
    let e = u32::try_from(ell + 1).map_err(|_| invalid("ell too large"))?;
    let c = correction_factor(m, e + 1)?;
    Ok(BigInt::from(m).pow(e) / c)
}
