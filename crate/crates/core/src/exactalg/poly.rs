//! Sparse Laurent polynomials over the rationals in a fixed variable set.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::var::{Exps, Var, NVARS};

/// A single term `coeff * q^e0 T1^e1 T2^e2 X^e3 Z^e4 t^e5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigRational,
    pub exps: Exps,
}

impl Monomial {
    pub fn new(coeff: BigRational, exps: Exps) -> Self {
        Monomial { coeff, exps }
    }

    pub fn unit(exps: Exps) -> Self {
        Monomial { coeff: BigRational::one(), exps }
    }

    /// `var^e` with coefficient 1.
    pub fn var_pow(v: Var, e: i32) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Monomial::unit(exps)
    }

    /// Product of `var^e` over the given pairs.
    pub fn from_pairs(pairs: &[(Var, i32)]) -> Self {
        let mut exps = [0; NVARS];
        for &(v, e) in pairs {
            exps[v.index()] += e;
        }
        Monomial::unit(exps)
    }

    pub fn pow(&self, k: i32) -> Self {
        let mut exps = self.exps;
        for e in exps.iter_mut() {
            *e *= k;
        }
        let coeff = if k >= 0 {
            num_traits::pow(self.coeff.clone(), k as usize)
        } else {
            num_traits::pow(self.coeff.recip(), (-k) as usize)
        };
        Monomial { coeff, exps }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { coeff: &self.coeff * &other.coeff, exps: add_exps(&self.exps, &other.exps) }
    }
}

pub(crate) fn add_exps(a: &Exps, b: &Exps) -> Exps {
    let mut r = *a;
    for i in 0..NVARS {
        r[i] += b[i];
    }
    r
}

pub(crate) fn sub_exps(a: &Exps, b: &Exps) -> Exps {
    let mut r = *a;
    for i in 0..NVARS {
        r[i] -= b[i];
    }
    r
}

/// Laurent polynomial stored as exponent tuple to nonzero coefficient.
///
/// The map is ordered ascending, so the lexicographic leading term is the last entry.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exps, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_monomial(Monomial::new(c, [0; NVARS]))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        Self::from_monomial(Monomial::var_pow(v, 1))
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::from_monomial(Monomial::var_pow(v, e))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !m.coeff.is_zero() {
            terms.insert(m.exps, m.coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for m in it {
            p.add_term(m.exps, m.coeff);
        }
        p
    }

    /// `1 - m`, the building block of every product formula here.
    pub fn one_minus(m: &Monomial) -> Self {
        let mut p = LaurentPoly::one();
        p.add_term(m.exps, -m.coeff.clone());
        p
    }

    pub fn add_term(&mut self, exps: Exps, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; NVARS]).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of exponents.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Exps, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exps, &BigRational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.iter_desc().map(|(e, c)| Monomial::new(c.clone(), *e)).collect()
    }

    pub fn coeff(&self, exps: &Exps) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<(&Exps, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<Monomial> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some(Monomial::new(c.clone(), *e))
        } else {
            None
        }
    }

    /// Variables with a nonzero exponent in some term.
    pub fn used_vars(&self) -> [bool; NVARS] {
        let mut used = [false; NVARS];
        for e in self.terms.keys() {
            for i in 0..NVARS {
                used[i] |= e[i] != 0;
            }
        }
        used
    }

    /// Componentwise minimum exponent; zero tuple for the zero polynomial.
    pub fn min_exps(&self) -> Exps {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return [0; NVARS] };
        let mut m = *first;
        for e in it {
            for i in 0..NVARS {
                m[i] = m[i].min(e[i]);
            }
        }
        m
    }

    pub fn max_exps(&self) -> Exps {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return [0; NVARS] };
        let mut m = *first;
        for e in it {
            for i in 0..NVARS {
                m[i] = m[i].max(e[i]);
            }
        }
        m
    }

    pub fn degree_range(&self, v: Var) -> Option<(i32, i32)> {
        if self.is_zero() {
            return None;
        }
        let i = v.index();
        let lo = self.terms.keys().map(|e| e[i]).min().unwrap();
        let hi = self.terms.keys().map(|e| e[i]).max().unwrap();
        Some((lo, hi))
    }

    /// Multiply by the monomial `x^shift` with coefficient 1.
    pub fn shift(&self, shift: &Exps) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (add_exps(e, shift), c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        if m.coeff.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (add_exps(e, &m.exps), c * &m.coeff)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replace `v` by `v^factor` (factor may be negative).
    pub fn dilate(&self, v: Var, factor: i32) -> LaurentPoly {
        let i = v.index();
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[i] *= factor;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Replace each listed variable by its inverse.
    pub fn invert_vars(&self, vars: &[Var]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            for v in vars {
                e2[v.index()] = -e2[v.index()];
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Replace each variable `v` by the monomial `images[v]`.
    pub fn substitute_monomials(&self, images: &[(Var, Monomial)]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut m = Monomial::new(c.clone(), *e);
            for (v, img) in images {
                let k = m.exps[v.index()];
                if k != 0 {
                    m.exps[v.index()] = 0;
                    m = m.mul(&img.pow(k));
                }
            }
            out.add_term(m.exps, m.coeff);
        }
        out
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: i32) -> LaurentPoly {
        let i = v.index();
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] == k)
                .map(|(e, c)| {
                    let mut e2 = *e;
                    e2[i] = 0;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Drop all terms with `v`-degree above `k`.
    pub fn truncate(&self, v: Var, k: i32) -> LaurentPoly {
        let i = v.index();
        LaurentPoly { terms: self.terms.iter().filter(|(e, _)| e[i] <= k).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// Evaluate the listed variables at rational values.
    ///
    /// Fails with `None` when a zero value meets a negative exponent.
    pub fn eval_partial(&self, point: &[(Var, BigRational)]) -> Option<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let mut c2 = c.clone();
            for (v, x) in point {
                let k = e2[v.index()];
                if k == 0 {
                    continue;
                }
                if x.is_zero() {
                    if k < 0 {
                        return None;
                    }
                    c2 = BigRational::zero();
                } else if k > 0 {
                    c2 *= num_traits::pow(x.clone(), k as usize);
                } else {
                    c2 *= num_traits::pow(x.recip(), (-k) as usize);
                }
                e2[v.index()] = 0;
            }
            out.add_term(e2, c2);
        }
        Some(out)
    }

    /// Exact quotient `self / d` when it exists in the Laurent ring.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if let Some(m) = d.as_monomial() {
            let inv = Monomial::new(m.coeff.recip(), m.exps.map(|x| -x));
            return Some(self.mul_monomial(&inv));
        }
        let sf = self.min_exps();
        let sd = d.min_exps();
        let mut r = self.shift(&sf.map(|x| -x));
        let g = d.shift(&sd.map(|x| -x));
        let (lg_e, lg_c) = {
            let (e, c) = g.leading().unwrap();
            (*e, c.clone())
        };
        let mut quot = LaurentPoly::zero();
        while let Some((le, lc)) = r.leading() {
            if (0..NVARS).any(|i| le[i] < lg_e[i]) {
                return None;
            }
            let t = Monomial::new(lc / &lg_c, sub_exps(le, &lg_e));
            r -= &g.mul_monomial(&t);
            quot.add_term(t.exps, t.coeff);
        }
        Some(quot.shift(&sub_exps(&sf, &sd)))
    }

    /// Lowest common denominator of the coefficients.
    pub fn coeff_denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::from_monomial(m)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exps(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

fn fmt_coeff_body(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.iter_desc().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let vars: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e[v.index()] != 0)
                .map(|v| match e[v.index()] {
                    1 => v.name().to_string(),
                    k if k < 0 => format!("{}^({})", v.name(), k),
                    k => format!("{}^{}", v.name(), k),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", fmt_coeff_body(&a))?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_coeff_body(&a), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::Q)
    }

    fn t2() -> LaurentPoly {
        LaurentPoly::var(Var::T2)
    }

    #[test]
    fn additive_cancellation() {
        let a = LaurentPoly::one() - &q() * &t2();
        let b = &q() * &t2();
        assert!((a + b).is_one());
    }

    #[test]
    fn exact_division() {
        let num = LaurentPoly::one() - q().pow(2);
        let den = LaurentPoly::one() - q();
        assert_eq!(num.div_exact(&den).unwrap(), LaurentPoly::one() + q());
        assert!(den.div_exact(&num).is_none());
        let lp = LaurentPoly::var_pow(Var::Q, -3) - LaurentPoly::var_pow(Var::Q, -1);
        let d = LaurentPoly::var_pow(Var::Q, -1) - q();
        assert_eq!(lp.div_exact(&d).unwrap(), LaurentPoly::var_pow(Var::Q, -2));
    }

    #[test]
    fn display_plain() {
        let p = LaurentPoly::one() - &q() * &t2() + LaurentPoly::var_pow(Var::Q, -1).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(p.to_string(), "-q*T2 + 1 + 1/2*q^(-1)");
    }

    #[test]
    fn eval_partial_pole() {
        let p = LaurentPoly::var_pow(Var::T1, -1);
        assert!(p.eval_partial(&[(Var::T1, BigRational::zero())]).is_none());
    }
}
