use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{check_budget, chunks, decode, p_adic_elementary_divisors, PrimeLevel};
use crate::error::Result;
use crate::exactalg::{LaurentPoly, Monomial, Var};
use crate::lattices::{a_matrix, LatticeFamily};

/// Conjugacy classes of the group attached to a lattice over Z/p^N, grouped by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCensus {
    pub family: LatticeFamily,
    pub level: PrimeLevel,
    /// `(class size, number of classes)` sorted by size.
    pub classes: Vec<(u128, u128)>,
}

impl ClassCensus {
    pub fn total_classes(&self) -> u128 {
        self.classes.iter().map(|&(_, c)| c).sum()
    }

    pub fn group_order(&self) -> u128 {
        self.classes.iter().map(|&(s, c)| s * c).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.to_string(),
            "p": self.level.p,
            "N": self.level.level,
            "classes": self.classes.iter().map(|(s, c)| json!({"size": s.to_string(), "count": c.to_string()})).collect::<Vec<_>>(),
            "total": self.total_classes().to_string(),
        })
    }
}

/// Class sizes from the elementary divisors of `A(x)` for every `x ∈ (Z/p^N)^a`.
pub fn cc_counts_via_a(fam: &LatticeFamily, pl: &PrimeLevel, budget: u128) -> Result<ClassCensus> {
    pl.require_odd()?;
    let a = fam.a();
    let b = fam.b();
    let m = pl.modulus();
    let total = check_budget(m, a, budget)?;
    let am = a_matrix(fam);
    let p = pl.p as u128;
    let fibre = (m as u128).pow(b as u32);
    let parts: Vec<Result<BTreeMap<u32, u128>>> = chunks(total)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut local = BTreeMap::new();
            let mut x = vec![0i64; a];
            for idx in lo..hi {
                decode(idx, m, &mut x);
                let t = p_adic_elementary_divisors(&am.evaluate(&x)?, pl);
                let e: u32 = t.0.iter().map(|&v| pl.level - v).sum();
                *local.entry(e).or_insert(0) += 1;
            }
            Ok(local)
        })
        .collect();
    let mut by_exp: BTreeMap<u32, u128> = BTreeMap::new();
    for part in parts {
        for (e, c) in part? {
            *by_exp.entry(e).or_insert(0) += c;
        }
    }
    let classes = by_exp.into_iter().map(|(e, c)| (p.pow(e), c * (fibre / p.pow(e)))).collect();
    Ok(ClassCensus { family: *fam, level: *pl, classes })
}

/// `Σ_s (number of classes of size s) T1^{log_p s}`.
pub fn class_polynomial(census: &ClassCensus) -> LaurentPoly {
    let p = census.level.p as u128;
    let mut out = LaurentPoly::zero();
    for &(s, c) in &census.classes {
        let mut e = 0;
        let mut t = s;
        while t > 1 {
            t /= p;
            e += 1;
        }
        out += &LaurentPoly::from_monomial(Monomial::new(
            BigRational::from_integer(BigInt::from(c)),
            Monomial::var_pow(Var::T1, e).exps,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_classes() {
        let fam = LatticeFamily::f(1, 0).unwrap();
        let c = cc_counts_via_a(&fam, &PrimeLevel::new(3, 1).unwrap(), 1000).unwrap();
        assert_eq!(c.classes, vec![(1, 3), (3, 8)]);
        assert_eq!(c.total_classes(), 11);
        assert_eq!(c.group_order(), 27);
    }

    #[test]
    fn even_prime_refused() {
        let fam = LatticeFamily::f(1, 0).unwrap();
        assert!(cc_counts_via_a(&fam, &PrimeLevel::new(2, 1).unwrap(), 1000).is_err());
    }
}
