use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{invalid, Result};

/// A monomial in the indeterminates `s[u,v]`, `1 <= v <= u`.
///
/// Stored as an exponent map ordered by `(u, v)`; zero exponents are never
/// stored, so structural equality is monomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SMonomial {
    exps: BTreeMap<(u32, u32), u32>,
}

fn check_index(u: u32, v: u32) -> Result<()> {
    if v == 0 {
        return Err(invalid(format!(
            "s[{u},0] has no valuation; only 1 <= v <= u is allowed"
        )));
    }
    if v > u {
        return Err(invalid(format!("s[{u},{v}] needs v <= u")));
    }
    Ok(())
}

impl SMonomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(u: u32, v: u32) -> Result<Self> {
        Self::power(u, v, 1)
    }

    pub fn power(u: u32, v: u32, exp: u32) -> Result<Self> {
        check_index(u, v)?;
        let mut exps = BTreeMap::new();
        if exp > 0 {
            exps.insert((u, v), exp);
        }
        Ok(Self { exps })
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = ((u32, u32), u32)>) -> Result<Self> {
        let mut out = Self::one();
        for ((u, v), e) in pairs {
            out = &out * &Self::power(u, v, e)?;
        }
        Ok(out)
    }

    pub fn exponent(&self, u: u32, v: u32) -> u32 {
        self.exps.get(&(u, v)).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.values().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Largest `u` among the indeterminates present.
    pub fn max_row(&self) -> u32 {
        self.exps.keys().map(|&(u, _)| u).max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), u32)> + '_ {
        self.exps.iter().map(|(&k, &e)| (k, e))
    }

    /// `self / s[u,v]`, if `s[u,v]` divides `self`.
    pub fn without_factor(&self, u: u32, v: u32) -> Option<Self> {
        let e = self.exponent(u, v);
        if e == 0 {
            return None;
        }
        let mut out = self.clone();
        if e == 1 {
            out.exps.remove(&(u, v));
        } else {
            out.exps.insert((u, v), e - 1);
        }
        Some(out)
    }
}

impl Mul for &SMonomial {
    type Output = SMonomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &SMonomial) -> SMonomial {
        let mut exps = self.exps.clone();
        for (&k, &e) in &rhs.exps {
            *exps.entry(k).or_insert(0) += e;
        }
        SMonomial { exps }
    }
}

impl fmt::Display for SMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (n, (&(u, v), &e)) in self.exps.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "s[{u},{v}]")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
