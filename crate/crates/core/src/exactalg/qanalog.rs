//! Gaussian binomials and Pochhammer symbols in X.

use super::poly::{LaurentPoly, Monomial};
use super::var::Var;
use crate::error::{invalid, Result};

/// A subset `i_1 < ... < i_l` of `{0, ..., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetI {
    n: usize,
    elems: Vec<usize>,
}

impl SubsetI {
    pub fn new(n: usize, elems: Vec<usize>) -> Result<Self> {
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid(format!("subset {elems:?} is not strictly increasing")));
        }
        if elems.last().is_some_and(|&m| m >= n) {
            return Err(invalid(format!("subset {elems:?} is not contained in [0, {n})")));
        }
        Ok(SubsetI { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        SubsetI { n, elems: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        SubsetI { n, elems: (0..n).collect() }
    }

    /// Subset whose members are the set bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        SubsetI { n, elems: (0..n).filter(|i| mask >> i & 1 == 1).collect() }
    }

    /// All `2^n` subsets, ordered by bitmask.
    pub fn all(n: usize) -> Vec<SubsetI> {
        (0..1u64 << n).map(|m| SubsetI::from_mask(n, m)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn mask(&self) -> u64 {
        self.elems.iter().fold(0, |m, &i| m | 1 << i)
    }

    /// Gaps `mu_j = i_{j+1} - i_j` for `j = 0..=l`, with `i_0 = 0` and `i_{l+1} = n`.
    pub fn mu(&self) -> Vec<usize> {
        let mut pts = Vec::with_capacity(self.elems.len() + 2);
        pts.push(0);
        pts.extend_from_slice(&self.elems);
        pts.push(self.n);
        pts.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

fn x_pow(k: i32) -> Monomial {
    Monomial::var_pow(Var::X, k)
}

/// `prod_{k=lo}^{hi} (1 - X^k)`.
fn one_minus_range(lo: usize, hi: usize) -> LaurentPoly {
    (lo..=hi).map(|k| LaurentPoly::one_minus(&x_pow(k as i32))).product()
}

pub fn qbinomial(a: usize, b: usize) -> Result<LaurentPoly> {
    if b > a {
        return Err(invalid(format!("qbinomial({a}, {b}) needs a >= b")));
    }
    let num = one_minus_range(a - b + 1, a);
    let den = one_minus_range(1, b);
    num.div_exact(&den).ok_or_else(|| crate::error::Error::Consistency("X-binomial division".into()))
}

/// `binom(n, i_l) binom(i_l, i_{l-1}) ... binom(i_2, i_1)`.
pub fn qbinomial_multi(n: usize, subset: &SubsetI) -> Result<LaurentPoly> {
    if subset.n() != n {
        return Err(invalid(format!("subset built for n = {} used with n = {n}", subset.n())));
    }
    let mut acc = LaurentPoly::one();
    let mut top = n;
    for &i in subset.elems().iter().rev() {
        acc = &acc * &qbinomial(top, i)?;
        top = i;
    }
    Ok(acc)
}

/// `(x; y)_n = prod_{i=0}^{n-1} (1 - x y^i)`.
pub fn qpochhammer(x: &Monomial, y: &Monomial, n: usize) -> LaurentPoly {
    (0..n).map(|i| LaurentPoly::one_minus(&x.mul(&y.pow(i as i32)))).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xpoly(coeffs: &[i64]) -> LaurentPoly {
        coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| LaurentPoly::var_pow(Var::X, k as i32) * LaurentPoly::from_int(c))
            .sum()
    }

    #[test]
    fn small_binomials() {
        assert!(qbinomial(5, 0).unwrap().is_one());
        assert_eq!(qbinomial(2, 1).unwrap(), xpoly(&[1, 1]));
        assert_eq!(qbinomial(4, 2).unwrap(), xpoly(&[1, 1, 2, 1, 1]));
        assert!(qbinomial(2, 3).is_err());
    }

    #[test]
    fn multi_binomials() {
        assert!(qbinomial_multi(4, &SubsetI::empty(4)).unwrap().is_one());
        let s = SubsetI::new(2, vec![1]).unwrap();
        assert_eq!(qbinomial_multi(2, &s).unwrap(), xpoly(&[1, 1]));
        let s = SubsetI::new(3, vec![1, 2]).unwrap();
        let expect = &qbinomial(3, 2).unwrap() * &qbinomial(2, 1).unwrap();
        assert_eq!(qbinomial_multi(3, &s).unwrap(), expect);
        assert!(SubsetI::new(3, vec![2, 1]).is_err());
        assert!(SubsetI::new(3, vec![3]).is_err());
    }

    #[test]
    fn pochhammer() {
        let x = Monomial::var_pow(Var::X, 1);
        let y = Monomial::var_pow(Var::Z, 1);
        assert!(qpochhammer(&x, &y, 0).is_one());
        let expect = LaurentPoly::one_minus(&x) * LaurentPoly::one_minus(&x.mul(&y));
        assert_eq!(qpochhammer(&x, &y, 2), expect);
        assert_eq!(qpochhammer(&x, &x.pow(2), 1), LaurentPoly::one_minus(&x));
    }

    #[test]
    fn gaps_sum_to_n() {
        for s in SubsetI::all(4) {
            assert_eq!(s.mu().iter().sum::<usize>(), 4);
            assert_eq!(s.mu().len(), s.len() + 1);
        }
    }
}
