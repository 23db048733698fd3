use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{check_budget, chunks, decode, p_adic_elementary_divisors, ElemDivisorType, PrimeLevel};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Monomial, SubsetI, Var};
use crate::lattices::{b_matrix, Family, LatticeFamily};
use crate::verdict::Verdict;
use crate::zeta::{abar, f_poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub family: LatticeFamily,
    pub level: PrimeLevel,
    pub counts: BTreeMap<ElemDivisorType, u128>,
    pub domain_size: u128,
}

impl CensusResult {
    pub fn total(&self) -> u128 {
        self.counts.values().sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.to_string(),
            "p": self.level.p,
            "N": self.level.level,
            "counts": self.counts.iter().map(|(t, c)| json!({"type": t.0, "count": c.to_string()})).collect::<Vec<_>>(),
        })
    }
}

/// Length-n type of `B(y)`: the M block for G, the S block for H, paired divisors for F.
pub fn halved_type(fam: &LatticeFamily, b_of_y: &[Vec<i64>], pl: &PrimeLevel) -> Result<ElemDivisorType> {
    let n = fam.n;
    match fam.family {
        Family::G | Family::H => {
            let block: Vec<Vec<i64>> = b_of_y[..n].iter().map(|r| r[n..2 * n].to_vec()).collect();
            Ok(p_adic_elementary_divisors(&block, pl))
        }
        Family::F => {
            let full = p_adic_elementary_divisors(b_of_y, pl).0;
            let mut vals = full.clone();
            if vals.len() % 2 == 1 && vals.pop() != Some(pl.level) {
                return Err(Error::Consistency(format!("odd alternating matrix with type {full:?}")));
            }
            let mut half = Vec::with_capacity(vals.len() / 2);
            for pair in vals.chunks(2) {
                if pair[0] != pair[1] {
                    return Err(Error::Consistency(format!("unpaired divisors {full:?}")));
                }
                half.push(pair[0]);
            }
            Ok(ElemDivisorType(half))
        }
    }
}

fn is_primitive(v: &[i64], p: i64) -> bool {
    v.iter().any(|x| x % p != 0)
}

/// Types of `B(y)` over all primitive `y ∈ (Z/p^N)^b`.
pub fn census_b(fam: &LatticeFamily, pl: &PrimeLevel, budget: u128) -> Result<CensusResult> {
    let b = fam.b();
    let m = pl.modulus();
    let total = check_budget(m, b, budget)?;
    let bm = b_matrix(fam);
    let p = pl.p as i64;
    let parts: Vec<Result<BTreeMap<ElemDivisorType, u128>>> = chunks(total)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut local = BTreeMap::new();
            let mut y = vec![0i64; b];
            for idx in lo..hi {
                decode(idx, m, &mut y);
                if !is_primitive(&y, p) {
                    continue;
                }
                let t = halved_type(fam, &bm.evaluate(&y)?, pl)?;
                *local.entry(t).or_insert(0) += 1;
            }
            Ok(local)
        })
        .collect();
    let mut counts = BTreeMap::new();
    for part in parts {
        for (t, c) in part? {
            *counts.entry(t).or_insert(0) += c;
        }
    }
    let primitive = total - total / (p as u128).pow(b as u32);
    Ok(CensusResult { family: *fam, level: *pl, counts, domain_size: primitive })
}

/// One `(I, r_I)` cell of the census comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NIrICell {
    pub subset: Vec<usize>,
    pub r: Vec<u32>,
    pub observed: u128,
    pub expected: BigRational,
}

/// Decode a type into `(I, r_I)`; `None` when it fits no pattern.
fn decode_type(t: &[u32], n: usize, level: u32) -> Option<(SubsetI, Vec<u32>)> {
    if t.len() != n || t.first() != Some(&0) {
        return None;
    }
    let mut levels: Vec<(u32, usize)> = Vec::new();
    for &x in t {
        match levels.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => levels.push((x, 1)),
        }
    }
    if levels.last().unwrap().0 != level {
        levels.push((level, 0));
    }
    let l = levels.len() - 1;
    // levels[s] carries multiplicity mu_{l-s}
    let mut elems = vec![0usize; l];
    let mut top = n;
    for s in 0..l {
        top -= levels[s].1;
        elems[l - 1 - s] = top;
    }
    let r: Vec<u32> = (0..l).map(|j| levels[l - j].0 - levels[l - j - 1].0).collect();
    Some((SubsetI::new(n, elems).ok()?, r))
}

fn rat_pow(p: u64, e: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(p));
    if e >= 0 {
        num_traits::pow(b, e as usize)
    } else {
        num_traits::pow(b.recip(), (-e) as usize)
    }
}

/// `f_I(1/p) p^{Σ r_i a(i)}` with `a(i) = ā(i) - 2i - δ`.
fn expected_count(fam: &LatticeFamily, subset: &SubsetI, r: &[u32], p: u64) -> Result<BigRational> {
    let f = f_poly(fam, subset)?;
    let weight = f.eval(&[(Var::X, rat_pow(p, -1))])?;
    let mut e = 0i64;
    for (&i, &ri) in subset.elems().iter().zip(r) {
        e += ri as i64 * (abar(fam, i)? - 2 * i as i64 - fam.delta as i64);
    }
    Ok(weight * rat_pow(p, e))
}

/// All nondecreasing length-n types with entries in `0..=N` starting at 0.
fn all_types(n: usize, level: u32) -> Vec<Vec<u32>> {
    fn rec(pos: usize, n: usize, lo: u32, level: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == n {
            out.push(cur.clone());
            return;
        }
        for v in lo..=level {
            cur.push(v);
            rec(pos + 1, n, v, level, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0];
    rec(1, n, 0, level, &mut cur, &mut out);
    out
}

/// Compare every census cell with its closed-form count.
pub fn verify_nir(fam: &LatticeFamily, pl: &PrimeLevel, budget: u128) -> Result<(Verdict, Vec<NIrICell>)> {
    let census = census_b(fam, pl, budget)?;
    let mut bad = Vec::new();
    let mut cells = Vec::new();
    for (t, &c) in &census.counts {
        if decode_type(&t.0, fam.n, pl.level).is_none() {
            bad.push(format!("type {t} with count {c} fits no (I, r) pattern"));
        }
    }
    for t in all_types(fam.n, pl.level) {
        let (subset, r) = decode_type(&t, fam.n, pl.level).expect("pattern type");
        let observed = census.counts.get(&ElemDivisorType(t.clone())).copied().unwrap_or(0);
        let expected = expected_count(fam, &subset, &r, pl.p)?;
        if BigRational::from_integer(BigInt::from(observed)) != expected {
            bad.push(format!("I={:?} r={r:?}: census {observed}, closed form {expected}", subset.elems()));
        }
        cells.push(NIrICell { subset: subset.elems().to_vec(), r, observed, expected });
    }
    Ok((Verdict::from_failures(cells.len() as u64, bad), cells))
}

/// T2^N coefficient of `(1 - q^r T2) Z^irr` at `q = p`, assembled from the census.
pub fn zeta_irr_coefficient_oracle(fam: &LatticeFamily, pl: &PrimeLevel, budget: u128) -> Result<LaurentPoly> {
    let census = census_b(fam, pl, budget)?;
    let n = fam.n as i64;
    let big_n = pl.level as i64;
    let r = fam.r() as i64;
    let mut out = LaurentPoly::zero();
    for (t, &c) in &census.counts {
        let s: i64 = t.0.iter().map(|&m| m.min(pl.level) as i64).sum();
        let coeff = BigRational::from_integer(BigInt::from(c)) * rat_pow(pl.p, -big_n * (2 * n - r) + 2 * s);
        out += &LaurentPoly::from_monomial(Monomial::new(coeff, Monomial::var_pow(Var::T1, (n * big_n - s) as i32).exps));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_decoding() {
        let (s, r) = decode_type(&[0], 1, 1).unwrap();
        assert_eq!((s.elems().to_vec(), r), (vec![0], vec![1]));
        let (s, r) = decode_type(&[0, 1], 2, 1).unwrap();
        assert_eq!((s.elems().to_vec(), r), (vec![1], vec![1]));
        let (s, r) = decode_type(&[0, 0], 2, 1).unwrap();
        assert_eq!((s.elems().to_vec(), r), (vec![0], vec![1]));
        let (s, r) = decode_type(&[0, 1, 3], 3, 3).unwrap();
        assert_eq!((s.elems().to_vec(), r), (vec![1, 2], vec![2, 1]));
        assert!(decode_type(&[1, 1], 2, 1).is_none());
    }

    #[test]
    fn heisenberg_census() {
        let fam = LatticeFamily::f(1, 0).unwrap();
        let c = census_b(&fam, &PrimeLevel::new(3, 1).unwrap(), 1000).unwrap();
        assert_eq!(c.counts.get(&ElemDivisorType(vec![0])), Some(&2));
        let c = census_b(&fam, &PrimeLevel::new(3, 2).unwrap(), 1000).unwrap();
        assert_eq!(c.counts.get(&ElemDivisorType(vec![0])), Some(&6));
        assert_eq!(c.total(), 6);
    }

    #[test]
    fn budget_refusal() {
        let fam = LatticeFamily::g(2).unwrap();
        let e = census_b(&fam, &PrimeLevel::new(3, 2).unwrap(), 100).unwrap_err();
        assert!(matches!(e, Error::BudgetExceeded { .. }));
    }
}
