//! Brute-force checks over the finite rings Z/p^N.
//!
//! Every routine here enumerates explicitly and refuses work beyond its budget.

mod census;
mod classes;
mod group;
mod membership;
mod minors;
mod snf;

pub use census::{census_b, halved_type, verify_nir, zeta_irr_coefficient_oracle, CensusResult, NIrICell};
pub use classes::{cc_counts_via_a, class_polynomial, ClassCensus};
pub use group::{direct_group_oracle, BchGroup};
pub use membership::verify_minor_membership;
pub use minors::{check_first_row_minors, check_minor_norm_profiles, MinorMode};
pub use snf::{p_adic_elementary_divisors, valuation};

use std::fmt;

use crate::error::{invalid, Error, Result};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A prime `p` together with a level `N`, describing the ring Z/p^N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeLevel {
    pub p: u64,
    pub level: u32,
}

impl PrimeLevel {
    pub fn new(p: u64, level: u32) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(invalid(format!("{p} is not prime")));
        }
        if level == 0 {
            return Err(invalid("level must be positive"));
        }
        let pl = PrimeLevel { p, level };
        if pl.modulus_checked().is_none() {
            return Err(invalid("p^N does not fit in 32 bits"));
        }
        Ok(pl)
    }

    fn modulus_checked(&self) -> Option<i64> {
        let m = (self.p as i64).checked_pow(self.level)?;
        (m <= u32::MAX as i64).then_some(m)
    }

    pub fn modulus(&self) -> i64 {
        self.modulus_checked().expect("validated")
    }

    pub fn require_odd(&self) -> Result<()> {
        if self.p == 2 {
            return Err(invalid("the group law needs 1/2, so p must be odd"));
        }
        Ok(())
    }
}

impl fmt::Display for PrimeLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} N={}", self.p, self.level)
    }
}

/// Sorted capped valuations of elementary divisors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemDivisorType(pub Vec<u32>);

impl ElemDivisorType {
    pub fn values(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for ElemDivisorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `base^exp` refused when it exceeds the budget.
pub(crate) fn check_budget(base: i64, exp: usize, budget: u128) -> Result<u128> {
    let mut total: u128 = 1;
    for _ in 0..exp {
        total = total.saturating_mul(base as u128);
    }
    if total > budget {
        return Err(Error::BudgetExceeded { needed: total, budget });
    }
    Ok(total)
}

/// Decode `idx` into `len` base-`m` digits, least significant first.
pub(crate) fn decode(mut idx: u128, m: i64, out: &mut [i64]) {
    for d in out.iter_mut() {
        *d = (idx % m as u128) as i64;
        idx /= m as u128;
    }
}

/// Split `0..total` into contiguous chunks for parallel workers.
pub(crate) fn chunks(total: u128) -> Vec<(u128, u128)> {
    let k: u128 = 256;
    let step = total.div_ceil(k).max(1);
    (0..k).map(|i| (i * step, ((i + 1) * step).min(total))).filter(|(a, b)| a < b).collect()
}
