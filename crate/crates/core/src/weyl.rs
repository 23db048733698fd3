//! Signed permutations, their statistics, and the Weyl-sum forms built from them.

use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{invalid, Result};
use crate::exactalg::{LaurentPoly, Monomial, RationalFunction, SubsetI, Var};
use crate::lattices::{binom2, Family, LatticeFamily};
use crate::verdict::Verdict;
use crate::zeta::{qt, x_monomial};

pub const MAX_N: usize = 8;

/// Element of B_n given by its window `(w(1), ..., w(n))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(invalid(format!("{window:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { window: (1..=n as i32).collect() }
    }

    /// `w0 = [-1, ..., -n]`.
    pub fn longest(n: usize) -> Self {
        SignedPermutation { window: (1..=n as i32).map(|i| -i).collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for `i ∈ [±n]_0`.
    pub fn at(&self, i: i32) -> i32 {
        match i {
            0 => 0,
            i if i > 0 => self.window[i as usize - 1],
            i => -self.window[(-i) as usize - 1],
        }
    }

    /// `(self · other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation { window: other.window.iter().map(|&x| self.at(x)).collect() }
    }

    pub fn descents(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.at(i as i32) > self.at(i as i32 + 1)).collect()
    }

    pub fn descent_mask(&self) -> u64 {
        self.descents().iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn stats(&self) -> StatBundle {
        stats(self)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatBundle {
    pub inv: u32,
    pub neg: u32,
    pub nsp: u32,
    pub ell: u32,
    pub big_l: u32,
    pub des: u32,
    pub maj: u32,
    pub rmaj: u32,
    pub sigma: u32,
    pub descents: Vec<usize>,
}

pub const STAT_COLUMNS: [&str; 9] = ["inv", "neg", "nsp", "ell", "L", "des", "maj", "rmaj", "sigma"];

impl StatBundle {
    pub fn values(&self) -> [u32; 9] {
        [self.inv, self.neg, self.nsp, self.ell, self.big_l, self.des, self.maj, self.rmaj, self.sigma]
    }

    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        for (k, v) in STAT_COLUMNS.iter().zip(self.values()) {
            m.insert((*k).to_string(), json!(v));
        }
        m.insert("descents".into(), json!(self.descents));
        Value::Object(m)
    }
}

/// Raw count of pairs `i < j` in `[±n]_0` with `w(i) > w(j)` and `i - j` odd.
fn odd_gap_inversions(w: &SignedPermutation) -> u32 {
    let n = w.n() as i32;
    let mut c = 0;
    for i in -n..=n {
        for j in i + 1..=n {
            if (j - i) % 2 != 0 && w.at(i) > w.at(j) {
                c += 1;
            }
        }
    }
    c
}

pub fn stats(w: &SignedPermutation) -> StatBundle {
    let n = w.n();
    let win = &w.window;
    let mut inv = 0;
    let mut nsp = 0;
    for i in 0..n {
        for j in i + 1..n {
            if win[i] > win[j] {
                inv += 1;
            }
            if win[i] + win[j] < 0 {
                nsp += 1;
            }
        }
    }
    let neg = win.iter().filter(|&&x| x < 0).count() as u32;
    let raw_l = odd_gap_inversions(w);
    debug_assert!(raw_l % 2 == 0);
    let descents = w.descents();
    let nn = n as u32;
    StatBundle {
        inv,
        neg,
        nsp,
        ell: inv + neg + nsp,
        big_l: raw_l / 2,
        des: descents.len() as u32,
        maj: descents.iter().map(|&i| i as u32).sum(),
        rmaj: descents.iter().map(|&i| nn - i as u32).sum(),
        sigma: descents.iter().map(|&i| nn * nn - (i * i) as u32).sum(),
        descents,
    }
}

/// Lexicographic enumeration of windows, optionally with a fixed first entry.
pub struct BnIter {
    n: usize,
    cur: Option<Vec<i32>>,
    fixed_prefix: usize,
}

impl BnIter {
    fn smallest_completion(prefix: &[i32], n: usize) -> Vec<i32> {
        let mut used = vec![false; n + 1];
        for &x in prefix {
            used[x.unsigned_abs() as usize] = true;
        }
        let mut w = prefix.to_vec();
        w.extend((1..=n as i32).rev().filter(|&a| !used[a as usize]).map(|a| -a));
        w
    }

    fn with_first(n: usize, first: i32) -> Self {
        BnIter { n, cur: Some(Self::smallest_completion(&[first], n)), fixed_prefix: 1 }
    }

    fn advance(&mut self) {
        let Some(w) = self.cur.as_mut() else { return };
        let n = self.n;
        for pos in (self.fixed_prefix..n).rev() {
            let mut used = vec![false; n + 1];
            for &x in &w[..pos] {
                used[x.unsigned_abs() as usize] = true;
            }
            let next = ((w[pos] + 1)..=n as i32).find(|&v| v != 0 && !used[v.unsigned_abs() as usize]);
            if let Some(v) = next {
                let mut prefix = w[..pos].to_vec();
                prefix.push(v);
                *w = Self::smallest_completion(&prefix, n);
                return;
            }
        }
        self.cur = None;
    }
}

impl Iterator for BnIter {
    type Item = SignedPermutation;
    fn next(&mut self) -> Option<SignedPermutation> {
        let w = self.cur.clone()?;
        self.advance();
        Some(SignedPermutation { window: w })
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(invalid(format!("n = {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

/// All of B_n in lexicographic window order.
pub fn enumerate_bn(n: usize) -> Result<BnIter> {
    check_n(n)?;
    Ok(BnIter { n, cur: Some(BnIter::smallest_completion(&[], n)), fixed_prefix: 0 })
}

/// Sum a per-element polynomial over B_n, split across workers by first entry.
fn par_sum<F>(n: usize, f: F) -> LaurentPoly
where
    F: Fn(&SignedPermutation) -> LaurentPoly + Sync,
{
    let firsts: Vec<i32> = (-(n as i32)..=n as i32).filter(|&v| v != 0).collect();
    let parts: Vec<LaurentPoly> = firsts
        .into_par_iter()
        .map(|v| {
            let mut acc = LaurentPoly::zero();
            for w in BnIter::with_first(n, v) {
                acc += &f(&w);
            }
            acc
        })
        .collect();
    parts.into_iter().sum()
}

/// Elements with `D(w) ⊆ I`.
pub fn bn_descent_class(n: usize, subset: &SubsetI) -> Result<Vec<SignedPermutation>> {
    check_n(n)?;
    if subset.n() != n {
        return Err(invalid("subset size does not match n"));
    }
    let mask = subset.mask();
    Ok(enumerate_bn(n)?.filter(|w| w.descent_mask() & !mask == 0).collect())
}

/// Sign `χ(w)` of the Weyl-sum form.
pub fn chi(fam: &LatticeFamily, s: &StatBundle) -> i64 {
    let e = match fam.family {
        Family::F | Family::G => s.neg,
        Family::H => s.ell,
    };
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Weight `h(w)` of the Weyl-sum form.
pub fn h_weight(fam: &LatticeFamily, s: &StatBundle) -> i64 {
    match fam.family {
        Family::F => 2 * s.ell as i64 + (2 * fam.delta as i64 - 1) * s.neg as i64,
        Family::G => s.ell as i64,
        Family::H => s.big_l as i64,
    }
}

fn signed_x(sign: i64, e: i64) -> LaurentPoly {
    LaurentPoly::from_monomial(Monomial::var_pow(Var::X, e as i32)) * LaurentPoly::from_int(sign)
}

pub fn f_weyl(fam: &LatticeFamily, subset: &SubsetI) -> Result<LaurentPoly> {
    let n = fam.n;
    check_n(n)?;
    if subset.n() != n {
        return Err(invalid("subset size does not match n"));
    }
    let mask = subset.mask();
    Ok(par_sum(n, |w| {
        if w.descent_mask() & !mask != 0 {
            return LaurentPoly::zero();
        }
        let s = stats(w);
        signed_x(chi(fam, &s), h_weight(fam, &s))
    }))
}

pub fn zeta_irr_weyl(fam: &LatticeFamily) -> Result<RationalFunction> {
    let n = fam.n;
    if n > 6 {
        return Err(invalid("Weyl-sum form is limited to n <= 6"));
    }
    let xs: Vec<Monomial> = (0..=n).map(|i| x_monomial(fam, i)).collect();
    let num = par_sum(n, |w| {
        let s = stats(w);
        let mut m = qt(-h_weight(fam, &s) as i32, 0, 0);
        for &i in &s.descents {
            m = m.mul(&xs[i]);
        }
        LaurentPoly::from_monomial(m) * LaurentPoly::from_int(chi(fam, &s))
    });
    let den: LaurentPoly = xs.iter().map(LaurentPoly::one_minus).product();
    RationalFunction::new(num, den)
}

fn xz(x: i64, z: i32) -> Monomial {
    Monomial::from_pairs(&[(Var::X, x as i32), (Var::Z, z)])
}

fn check_identity(lhs: LaurentPoly, rhs: LaurentPoly, checked: u64, label: &str) -> Verdict {
    if lhs == rhs {
        Verdict::pass(checked)
    } else {
        Verdict::from_failures(checked, vec![format!("{label}: difference {}", &lhs - &rhs)])
    }
}

pub fn verify_stat_f(n: usize, delta: usize) -> Result<Verdict> {
    check_n(n)?;
    if n > 6 || delta > 1 {
        return Err(invalid("needs n <= 6 and delta in {0, 1}"));
    }
    let (nn, d) = (n as i64, delta as i64);
    let lhs = par_sum(n, |w| {
        let s = stats(w);
        let e = -(2 * (s.ell as i64 - s.sigma as i64) + (2 * d - 1) * s.neg as i64
            - (2 * d - 3) * s.rmaj as i64
            - (2 * nn + d) * s.des as i64);
        let sign = if s.neg % 2 == 0 { 1 } else { -1 };
        LaurentPoly::from_monomial(xz(e, s.des as i32)) * LaurentPoly::from_int(sign)
    });
    let mut rhs = LaurentPoly::one_minus(&xz(binom2(2 * nn + d - 1), 1));
    for i in 2..=nn {
        rhs = rhs * LaurentPoly::one_minus(&xz(binom2(2 * nn + d) - binom2(2 * i + d) + 2 * i + d, 1));
    }
    Ok(check_identity(lhs, rhs, bn_order(n), "F identity"))
}

/// Sign in front of `4n·des` in the H exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HDescentSign {
    Minus,
    Plus,
}

pub fn verify_stat_gh(n: usize) -> Result<Verdict> {
    verify_stat_gh_with(n, HDescentSign::Minus)
}

pub fn verify_stat_gh_with(n: usize, sign: HDescentSign) -> Result<Verdict> {
    if !(2..=6).contains(&n) {
        return Err(invalid("needs 2 <= n <= 6"));
    }
    let nn = n as i64;
    let g_lhs = par_sum(n, |w| {
        let s = stats(w);
        let e = -(s.ell as i64 - s.sigma as i64 - 2 * s.maj as i64);
        let c = if s.neg % 2 == 0 { 1 } else { -1 };
        LaurentPoly::from_monomial(xz(e, s.des as i32)) * LaurentPoly::from_int(c)
    });
    let c = 2 * binom2(nn);
    let mut g_rhs = LaurentPoly::one_minus(&xz(c, 1)) * LaurentPoly::one_minus(&xz(c + 1, 1))
        + LaurentPoly::from(xz(nn * nn, 1)) * LaurentPoly::one_minus(&xz(-nn, 0)) * LaurentPoly::one_minus(&xz(-nn + 1, 0));
    for i in 3..=nn {
        g_rhs = g_rhs * LaurentPoly::one_minus(&xz(nn * nn - i * i + 2 * i, 1));
    }
    // H exponents are halves of integers, so both sides are taken in X^(1/2).
    let sgn = if sign == HDescentSign::Minus { -1 } else { 1 };
    let h_lhs = par_sum(n, |w| {
        let s = stats(w);
        let e = -(2 * s.big_l as i64 - s.sigma as i64 + 3 * s.rmaj as i64 + sgn * 4 * nn * s.des as i64);
        let c = if s.ell % 2 == 0 { 1 } else { -1 };
        LaurentPoly::from_monomial(xz(e, s.des as i32)) * LaurentPoly::from_int(c)
    });
    let (c, e) = (binom2(nn), binom2(nn + 1));
    let mut h_rhs = LaurentPoly::one_minus(&xz(c, 1)) * LaurentPoly::one_minus(&xz(c + 2, 1))
        + LaurentPoly::from(xz(e, 1)) * LaurentPoly::one_minus(&xz(-nn + 1, 0)).pow(2);
    for i in 3..=nn {
        h_rhs = h_rhs * LaurentPoly::one_minus(&xz(e - binom2(i + 1) + 2 * i, 1));
    }
    let h_rhs = h_rhs.dilate(Var::X, 2);
    let g = check_identity(g_lhs, g_rhs, bn_order(n), "G identity");
    let h = check_identity(h_lhs, h_rhs, bn_order(n), "H identity");
    Ok(g.merge(h))
}

pub fn verify_reiner(n: usize) -> Result<Verdict> {
    check_n(n)?;
    let z = |k: u32| LaurentPoly::var_pow(Var::Z, k as i32);
    let by_neg = par_sum(n, |w| {
        let s = stats(w);
        z(s.des) * LaurentPoly::from_int(if s.neg % 2 == 0 { 1 } else { -1 })
    });
    let by_ell = par_sum(n, |w| {
        let s = stats(w);
        z(s.des) * LaurentPoly::from_int(if s.ell % 2 == 0 { 1 } else { -1 })
    });
    let target = LaurentPoly::one_minus(&Monomial::var_pow(Var::Z, 1)).pow(n as u32);
    let a = check_identity(by_neg, target.clone(), bn_order(n), "sign by neg");
    let b = check_identity(by_ell, target, bn_order(n), "sign by ell");
    Ok(a.merge(b))
}

pub fn verify_w0_identity(fam: &LatticeFamily) -> Result<Verdict> {
    let n = fam.n;
    if n > 6 {
        return Err(invalid("needs n <= 6"));
    }
    let w0 = SignedPermutation::longest(n);
    let h0 = h_weight(fam, &stats(&w0));
    let mut bad = Vec::new();
    let mut checked = 0;
    for w in enumerate_bn(n)? {
        checked += 1;
        let lhs = h_weight(fam, &stats(&w.compose(&w0))) + h_weight(fam, &stats(&w));
        if lhs != h0 {
            bad.push(format!("{w}: {lhs} != {h0}"));
        }
    }
    Ok(Verdict::from_failures(checked, bad))
}

pub fn bn_order(n: usize) -> u64 {
    (1..=n as u64).product::<u64>() << n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_sizes_and_order() {
        let b1: Vec<_> = enumerate_bn(1).unwrap().collect();
        assert_eq!(b1, vec![w(&[-1]), w(&[1])]);
        assert_eq!(enumerate_bn(2).unwrap().count(), 8);
        assert_eq!(enumerate_bn(3).unwrap().count(), 48);
        let all: Vec<_> = enumerate_bn(3).unwrap().collect();
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        assert!(enumerate_bn(0).is_err());
        assert!(enumerate_bn(9).is_err());
    }

    #[test]
    fn longest_element() {
        for n in 1..=5 {
            let s = stats(&SignedPermutation::longest(n));
            assert_eq!(s.inv as usize, n * (n - 1) / 2);
            assert_eq!(s.neg as usize, n);
            assert_eq!(s.ell as usize, n * n);
            assert_eq!(s.descents, (0..n).collect::<Vec<_>>());
        }
        assert_eq!(stats(&SignedPermutation::longest(1)).big_l, 1);
    }

    #[test]
    fn generator_s0() {
        let s = stats(&w(&[-1, 2, 3]));
        assert_eq!(s.ell, 1);
        assert_eq!(s.descents, vec![0]);
    }

    #[test]
    fn descent_classes() {
        assert_eq!(bn_descent_class(3, &SubsetI::empty(3)).unwrap(), vec![SignedPermutation::identity(3)]);
        assert_eq!(bn_descent_class(3, &SubsetI::full(3)).unwrap().len(), 48);
        assert_eq!(bn_descent_class(1, &SubsetI::full(1)).unwrap().len(), 2);
    }

    #[test]
    fn f_weyl_small() {
        let one_minus_x = LaurentPoly::one_minus(&Monomial::var_pow(Var::X, 1));
        assert_eq!(f_weyl(&LatticeFamily::h(1).unwrap(), &SubsetI::full(1)).unwrap(), one_minus_x);
        assert_eq!(f_weyl(&LatticeFamily::f(1, 0).unwrap(), &SubsetI::full(1)).unwrap(), one_minus_x);
        assert!(f_weyl(&LatticeFamily::g(3).unwrap(), &SubsetI::empty(3)).unwrap().is_one());
    }

    #[test]
    fn identities_small() {
        assert!(verify_stat_f(1, 0).unwrap().ok);
        assert!(verify_stat_f(2, 0).unwrap().ok);
        assert!(verify_stat_f(3, 1).unwrap().ok);
        assert!(verify_stat_gh(2).unwrap().ok);
        assert!(verify_stat_gh(3).unwrap().ok);
        assert!(verify_stat_gh(1).is_err());
        assert!(verify_reiner(2).unwrap().ok);
    }

    #[test]
    fn composition_with_w0() {
        let w0 = SignedPermutation::longest(3);
        let x = w(&[2, -3, 1]);
        assert_eq!(x.compose(&w0), w(&[-2, 3, -1]));
        assert_eq!(x.compose(&SignedPermutation::identity(3)), x);
    }
}
