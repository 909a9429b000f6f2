use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use super::SMonomial;

/// The exact value `int_part - eps_count * ε` for an infinitesimal `ε > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Valuation {
    pub int_part: i64,
    pub eps_count: u64,
}

impl Valuation {
    pub fn new(int_part: i64, eps_count: u64) -> Self {
        Self {
            int_part,
            eps_count,
        }
    }

    pub fn exceeds(&self, ell: i64) -> bool {
        self.int_part > ell
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.int_part
            .cmp(&other.int_part)
            .then_with(|| other.eps_count.cmp(&self.eps_count))
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        Valuation::new(self.int_part + rhs.int_part, self.eps_count + rhs.eps_count)
    }
}

impl Sub for Valuation {
    type Output = ValuationDelta;

    fn sub(self, rhs: Valuation) -> ValuationDelta {
        ValuationDelta {
            int_part: self.int_part - rhs.int_part,
            eps: self.eps_count as i64 - rhs.eps_count as i64,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eps_count {
            0 => write!(f, "{}", self.int_part),
            1 => write!(f, "{} - e", self.int_part),
            n => write!(f, "{} - {n}e", self.int_part),
        }
    }
}

/// A difference of valuations, `int_part - eps * ε` with `eps` of either sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationDelta {
    pub int_part: i64,
    pub eps: i64,
}

impl ValuationDelta {
    pub fn exceeds(&self, ell: i64) -> bool {
        self.int_part > ell || (self.int_part == ell && self.eps < 0)
    }
}

/// `v(s[j,j]) = j`, `v(s[j,j-1]) = j - 1 - ε`, and zero below the subdiagonal;
/// additive over products.
pub fn valuation(p: &SMonomial) -> Valuation {
    p.iter().fold(Valuation::default(), |acc, ((u, v), e)| {
        let e = e as i64;
        let single = if v == u {
            Valuation::new(u as i64, 0)
        } else if v + 1 == u {
            Valuation::new(v as i64, 1)
        } else {
            Valuation::new(0, 0)
        };
        acc + Valuation::new(single.int_part * e, single.eps_count * e as u64)
    })
}

/// Whether `v > ell` with `ε` infinitesimal.
pub fn val_exceeds(v: Valuation, ell: i64) -> bool {
    v.exceeds(ell)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_indeterminates() {
        assert_eq!(
            valuation(&SMonomial::var(1, 1).unwrap()),
            Valuation::new(1, 0)
        );
        assert_eq!(
            valuation(&SMonomial::var(2, 1).unwrap()),
            Valuation::new(1, 1)
        );
        assert_eq!(
            valuation(&SMonomial::var(5, 4).unwrap()),
            Valuation::new(4, 1)
        );
        assert_eq!(
            valuation(&SMonomial::var(5, 3).unwrap()),
            Valuation::new(0, 0)
        );
        assert_eq!(valuation(&SMonomial::one()), Valuation::new(0, 0));
    }

    #[test]
    fn product_is_additive() {
        let p = SMonomial::from_exponents([((1, 1), 1), ((2, 1), 2)]).unwrap();
        assert_eq!(valuation(&p), Valuation::new(3, 2));
    }

    #[test]
    fn exceedance() {
        assert!(val_exceeds(Valuation::new(3, 2), 2));
        assert!(!val_exceeds(Valuation::new(2, 0), 2));
        assert!(val_exceeds(Valuation::new(2, 5), 1));
        assert!(!val_exceeds(Valuation::new(2, 1), 2));
    }

    #[test]
    fn ordering_treats_eps_as_infinitesimal() {
        assert!(Valuation::new(2, 0) > Valuation::new(2, 1));
        assert!(Valuation::new(2, 100) > Valuation::new(1, 0));
        assert!(Valuation::new(-1, 0) < Valuation::new(0, 3));
    }

    #[test]
    fn delta_exceedance() {
        // 3 - (2 - ε) = 1 + ε > 1
        let d = Valuation::new(3, 0) - Valuation::new(2, 1);
        assert_eq!(
            d,
            ValuationDelta {
                int_part: 1,
                eps: -1
            }
        );
        assert!(d.exceeds(1));
        assert!(!d.exceeds(2));
        // (2 - ε) - 1 = 1 - ε is not > 1
        assert!(!(Valuation::new(2, 1) - Valuation::new(1, 0)).exceeds(1));
    }

    #[test]
    fn exhaustive_small_ordering() {
        for a in -4..=4i64 {
            for b in 0..=4u64 {
                for ell in -5..=5i64 {
                    assert_eq!(val_exceeds(Valuation::new(a, b), ell), a > ell);
                }
            }
        }
    }
}
