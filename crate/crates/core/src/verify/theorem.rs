use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::modulus::theorem_modulus;
use crate::series::{check_base, restricted_series, TruncatedSeries};

/// Default ceiling on the number of series coefficients a check may request.
pub const DEFAULT_BUDGET: usize = 200_000;

/// `m^(j+2) n + m^(j+1) + ... + m^2`.
pub fn theorem_target(m: u32, j: u32, n: u64) -> Result<u64> {
    check_base(m)?;
    if j == 0 {
        return Err(invalid("level j must be at least 1"));
    }
    let overflow = || invalid(format!("target for m={m}, j={j}, n={n} overflows u64"));
    let m = m as u64;
    let mut offset = 0u64;
    let mut power = m;
    for _ in 2..=j + 1 {
        power = power.checked_mul(m).ok_or_else(overflow)?;
        offset = offset.checked_add(power).ok_or_else(overflow)?;
    }
    let lead = power.checked_mul(m).ok_or_else(overflow)?;
    lead.checked_mul(n)
        .and_then(|v| v.checked_add(offset))
        .ok_or_else(overflow)
}

/// Series truncation needed to read `c_m` at every target `n <= n_max`.
pub fn required_trunc(m: u32, j: u32, n_max: u64) -> Result<usize> {
    let top = theorem_target(m, j, n_max)?;
    usize::try_from(top + 1).map_err(|_| invalid("target does not fit in memory"))
}

/// Largest `n` whose target stays below `budget` coefficients, if any.
pub fn max_n_within(m: u32, j: u32, budget: usize) -> Result<Option<u64>> {
    let base = theorem_target(m, j, 0)?;
    if base >= budget as u64 {
        return Ok(None);
    }
    let step = theorem_target(m, j, 1)? - base;
    Ok(Some((budget as u64 - 1 - base) / step))
}

pub(crate) fn check_budget(needed: usize, budget: usize) -> Result<()> {
    if needed > budget {
        return Err(Error::ResourceLimit {
            needed: needed as u64,
            limit: budget as u64,
        });
    }
    Ok(())
}

/// One instance of `c_m(N) ≡ 0 (mod m^j / c_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceCase {
    pub m: u32,
    pub j: u32,
    pub n: u64,
    pub target: u64,
    pub count: BigInt,
    pub modulus: BigInt,
    pub ok: bool,
    /// For prime `m`, the exact power of `m` dividing `count`; otherwise the
    /// multiplicity of `modulus` in `count`.
    pub padic: u32,
}

fn multiplicity(value: &BigInt, d: &BigInt) -> u32 {
    if value.is_zero() || *d <= BigInt::from(1) {
        return 0;
    }
    let mut v = value.clone();
    let mut k = 0;
    loop {
        let (q, r) = v.div_rem(d);
        if !r.is_zero() {
            return k;
        }
        v = q;
        k += 1;
    }
}

fn is_prime(m: u32) -> bool {
    m >= 2
        && (2..)
            .take_while(|d| d * d <= m)
            .all(|d| !m.is_multiple_of(d))
}

fn read(series: &TruncatedSeries, n: u64) -> Result<&BigInt> {
    usize::try_from(n)
        .ok()
        .and_then(|n| series.coeff(n))
        .ok_or_else(|| {
            invalid(format!(
                "series truncated at {} does not reach q^{n}",
                series.trunc()
            ))
        })
}

/// Checks the congruence for `n = 0..=n_max` against a precomputed `C_m(q)`.
pub fn verify_theorem_on(
    series: &TruncatedSeries,
    m: u32,
    j: u32,
    n_max: u64,
) -> Result<Vec<CongruenceCase>> {
    let modulus = theorem_modulus(m, j)?;
    let prime = is_prime(m);
    let base = BigInt::from(m);
    (0..=n_max)
        .map(|n| {
            let target = theorem_target(m, j, n)?;
            let count = read(series, target)?.clone();
            let ok = count.is_multiple_of(&modulus);
            let padic = multiplicity(&count, if prime { &base } else { &modulus });
            Ok(CongruenceCase {
                m,
                j,
                n,
                target,
                count,
                modulus: modulus.clone(),
                ok,
                padic,
            })
        })
        .collect()
}

/// Checks the congruence for `n = 0..=n_max`, computing the series itself.
pub fn verify_theorem(m: u32, j: u32, n_max: u64, budget: usize) -> Result<Vec<CongruenceCase>> {
    let trunc = required_trunc(m, j, n_max)?;
    check_budget(trunc, budget)?;
    verify_theorem_on(&restricted_series(m, trunc)?, m, j, n_max)
}

/// `a_j(n) = c_m(m^(j+2) n + m^(j+1) + ... + m^2)` for `n = 0..=n_max`.
pub fn extract_subsequence_on(
    series: &TruncatedSeries,
    m: u32,
    j: u32,
    n_max: u64,
) -> Result<Vec<BigInt>> {
    (0..=n_max)
        .map(|n| read(series, theorem_target(m, j, n)?).cloned())
        .collect()
}

pub fn extract_subsequence(m: u32, j: u32, n_max: u64, budget: usize) -> Result<Vec<BigInt>> {
    let trunc = required_trunc(m, j, n_max)?;
    check_budget(trunc, budget)?;
    extract_subsequence_on(&restricted_series(m, trunc)?, m, j, n_max)
}
