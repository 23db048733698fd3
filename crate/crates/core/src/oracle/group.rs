use std::collections::{BTreeMap, VecDeque};

use super::{check_budget, decode, ClassCensus, PrimeLevel};
use crate::error::{invalid, Result};
use crate::lattices::{presentation, LatticeFamily, LatticePresentation};

const GROUP_LIMIT: u128 = 1_000_000;

/// The group on `(Z/p^N)^h` with product `(x, y)(x', y') = (x + x', y + y' + [x, x']/2)`.
#[derive(Clone, Debug)]
pub struct BchGroup {
    pub level: PrimeLevel,
    pres: LatticePresentation,
    modulus: i64,
    half: i64,
}

impl BchGroup {
    pub fn new(fam: &LatticeFamily, pl: &PrimeLevel) -> Result<Self> {
        pl.require_odd()?;
        let modulus = pl.modulus();
        Ok(BchGroup { level: *pl, pres: presentation(fam), modulus, half: (modulus + 1) / 2 })
    }

    pub fn rank(&self) -> usize {
        self.pres.h
    }

    fn reduce(&self, v: i64) -> i64 {
        v.rem_euclid(self.modulus)
    }

    pub fn identity(&self) -> Vec<i64> {
        vec![0; self.pres.h]
    }

    pub fn mul(&self, g: &[i64], k: &[i64]) -> Vec<i64> {
        let a = self.pres.a;
        let br = self.pres.bracket(&g[..a], &k[..a]);
        let mut out = Vec::with_capacity(self.pres.h);
        for i in 0..a {
            out.push(self.reduce(g[i] + k[i]));
        }
        for (j, c) in br.into_iter().enumerate() {
            let half = self.reduce(self.reduce(c) * self.half);
            out.push(self.reduce(g[a + j] + k[a + j] + half));
        }
        out
    }

    pub fn inv(&self, g: &[i64]) -> Vec<i64> {
        g.iter().map(|&v| self.reduce(-v)).collect()
    }

    pub fn conj(&self, g: &[i64], k: &[i64]) -> Vec<i64> {
        self.mul(&self.mul(g, k), &self.inv(g))
    }

    pub fn generators(&self) -> Vec<Vec<i64>> {
        (0..self.pres.a)
            .map(|i| {
                let mut e = self.identity();
                e[i] = 1;
                e
            })
            .collect()
    }

    fn index(&self, g: &[i64]) -> usize {
        g.iter().rev().fold(0usize, |acc, &v| acc * self.modulus as usize + v as usize)
    }
}

/// Conjugacy classes found by orbit search over the whole group.
pub fn direct_group_oracle(fam: &LatticeFamily, pl: &PrimeLevel, budget: u128) -> Result<ClassCensus> {
    let grp = BchGroup::new(fam, pl)?;
    let order = check_budget(pl.modulus(), grp.rank(), budget.min(GROUP_LIMIT))?;
    if order > GROUP_LIMIT {
        return Err(invalid("group too large"));
    }
    let gens = grp.generators();
    let mut seen = vec![false; order as usize];
    let mut sizes: BTreeMap<u128, u128> = BTreeMap::new();
    let mut g = grp.identity();
    for idx in 0..order {
        if seen[idx as usize] {
            continue;
        }
        decode(idx, pl.modulus(), &mut g);
        seen[idx as usize] = true;
        let mut queue = VecDeque::from([g.clone()]);
        let mut size = 0u128;
        while let Some(k) = queue.pop_front() {
            size += 1;
            for s in &gens {
                let c = grp.conj(s, &k);
                let ci = grp.index(&c);
                if !seen[ci] {
                    seen[ci] = true;
                    queue.push_back(c);
                }
            }
        }
        *sizes.entry(size).or_insert(0) += 1;
    }
    Ok(ClassCensus { family: *fam, level: *pl, classes: sizes.into_iter().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_group() {
        let fam = LatticeFamily::f(1, 0).unwrap();
        let c = direct_group_oracle(&fam, &PrimeLevel::new(3, 1).unwrap(), 1000).unwrap();
        assert_eq!(c.classes, vec![(1, 3), (3, 8)]);
    }

    #[test]
    fn inverse_and_identity() {
        let fam = LatticeFamily::g(2).unwrap();
        let grp = BchGroup::new(&fam, &PrimeLevel::new(5, 1).unwrap()).unwrap();
        let g = vec![1, 2, 3, 4, 0, 1, 2, 3];
        assert_eq!(grp.mul(&g, &grp.inv(&g)), grp.identity());
    }
}
