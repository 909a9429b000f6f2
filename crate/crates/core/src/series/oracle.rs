//! Counting oracles that never touch the generating function.
//!
//! [`brute_force_count`] splits partitions by their largest part `m^L`: such a
//! partition is `1 + m + ... + m^L` plus an arbitrary partition of the rest
//! into parts `m^0..=m^L`, counted by a coin-change table.
//! [`enumerate_partitions`] lists partitions literally and filters out those
//! with gaps; it is only usable at tiny scale.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{check_base, PartitionSpec};
use crate::error::{Error, Result};

/// Largest `n` accepted by [`brute_force_count`].
pub const ORACLE_LIMIT: usize = 10_000;

/// Largest `n` accepted by [`enumerate_partitions`].
pub const ENUMERATION_LIMIT: usize = 40;

pub fn brute_force_count(spec: PartitionSpec) -> Result<BigInt> {
    let (m, n) = (spec.m() as usize, spec.n());
    if n > ORACLE_LIMIT {
        return Err(Error::ResourceLimit {
            needed: n as u64,
            limit: ORACLE_LIMIT as u64,
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }

    let mut total = BigInt::zero();
    let mut parts: Vec<usize> = Vec::new();
    let mut sigma = 0usize;
    let mut power = 1usize;
    loop {
        sigma += power;
        if sigma > n {
            break;
        }
        parts.push(power);
        total += coin_ways(n - sigma, &parts);
        power *= m;
    }
    Ok(total)
}

fn coin_ways(target: usize, parts: &[usize]) -> BigInt {
    let mut ways = vec![BigInt::zero(); target + 1];
    ways[0] = BigInt::one();
    for &p in parts {
        for v in p..=target {
            let (lo, hi) = ways.split_at_mut(v);
            hi[0] += &lo[v - p];
        }
    }
    ways.swap_remove(target)
}

/// Every restricted m-ary partition of `n`, each listed with parts in
/// non-increasing order.
pub fn enumerate_partitions(spec: PartitionSpec) -> Result<Vec<Vec<u64>>> {
    check_base(spec.m())?;
    let n = spec.n();
    if n > ENUMERATION_LIMIT {
        return Err(Error::ResourceLimit {
            needed: n as u64,
            limit: ENUMERATION_LIMIT as u64,
        });
    }
    let m = spec.m() as u64;
    let mut powers = vec![1u64];
    while powers.last().unwrap() * m <= n as u64 {
        powers.push(powers.last().unwrap() * m);
    }

    let mut all = Vec::new();
    let mut current = Vec::new();
    collect(n as u64, &powers, powers.len(), &mut current, &mut all);
    all.retain(|p| is_gap_free(p, &powers));
    Ok(all)
}

fn collect(
    rest: u64,
    powers: &[u64],
    limit: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    for idx in (0..limit).rev() {
        let p = powers[idx];
        if p <= rest {
            current.push(p);
            collect(rest - p, powers, idx + 1, current, out);
            current.pop();
        }
    }
}

fn is_gap_free(partition: &[u64], powers: &[u64]) -> bool {
    let Some(&largest) = partition.first() else {
        return true;
    };
    powers
        .iter()
        .take_while(|&&p| p <= largest)
        .all(|p| partition.contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: u32, n: usize) -> PartitionSpec {
        PartitionSpec::new(m, n).unwrap()
    }

    #[test]
    fn dp_examples() {
        assert_eq!(brute_force_count(spec(5, 0)).unwrap(), BigInt::from(1));
        assert_eq!(brute_force_count(spec(2, 5)).unwrap(), BigInt::from(3));
        assert_eq!(brute_force_count(spec(3, 9)).unwrap(), BigInt::from(3));
    }

    #[test]
    fn dp_guard() {
        assert!(matches!(
            brute_force_count(spec(2, ORACLE_LIMIT + 1)),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(enumerate_partitions(spec(2, ENUMERATION_LIMIT + 1)).is_err());
    }

    #[test]
    fn literal_lists() {
        assert_eq!(
            enumerate_partitions(spec(2, 0)).unwrap(),
            vec![Vec::<u64>::new()]
        );
        assert_eq!(
            enumerate_partitions(spec(2, 4)).unwrap(),
            vec![vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(
            enumerate_partitions(spec(2, 5)).unwrap(),
            vec![vec![2, 2, 1], vec![2, 1, 1, 1], vec![1; 5]]
        );
        let nine = enumerate_partitions(spec(3, 9)).unwrap();
        assert_eq!(
            nine,
            vec![vec![3, 3, 1, 1, 1], vec![3, 1, 1, 1, 1, 1, 1], vec![1; 9]]
        );
    }

    #[test]
    fn gap_detection() {
        // 4 = 4 has a gap at 1 and 2; 4+1+1 skips 2.
        let listed = enumerate_partitions(spec(2, 6)).unwrap();
        assert!(!listed.contains(&vec![4, 1, 1]));
        assert!(!listed.contains(&vec![4, 2]));
        assert!(listed.contains(&vec![2, 2, 1, 1]));
    }
}
