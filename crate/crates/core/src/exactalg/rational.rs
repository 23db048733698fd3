//! Rational functions as canonicalized quotients of Laurent polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::poly::{LaurentPoly, Monomial};
use super::var::Var;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial itself when the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = den.min_exps().map(|x| -x);
        let mut num = num.shift(&shift);
        let mut den = den.shift(&shift);
        let lead = den.leading().unwrap().1.clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if !den.is_one() {
            if let Some(q) = num.div_exact(&den) {
                return RationalFunction { num: q, den: LaurentPoly::one() };
            }
        }
        RationalFunction { num, den }
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul_parts(&rhs.den, &rhs.num))
    }

    pub fn recip(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, k: i32) -> Result<RationalFunction> {
        if k >= 0 {
            Ok(RationalFunction::canonical(self.num.pow(k as u32), self.den.pow(k as u32)))
        } else {
            self.recip()?.pow(-k)
        }
    }

    fn mul_parts(&self, num: &LaurentPoly, den: &LaurentPoly) -> RationalFunction {
        let (mut a, mut b) = (self.num.clone(), self.den.clone());
        let (mut c, mut d) = (num.clone(), den.clone());
        if !d.is_one() {
            if let Some(x) = a.div_exact(&d) {
                a = x;
                d = LaurentPoly::one();
            }
        }
        if !b.is_one() {
            if let Some(x) = c.div_exact(&b) {
                c = x;
                b = LaurentPoly::one();
            }
        }
        if !c.is_one() && !b.is_one() {
            if let Some(x) = b.div_exact(&c) {
                b = x;
                c = LaurentPoly::one();
            }
        }
        if !a.is_one() && !d.is_one() {
            if let Some(x) = d.div_exact(&a) {
                d = x;
                a = LaurentPoly::one();
            }
        }
        RationalFunction::canonical(&a * &c, &b * &d)
    }

    fn add_parts(&self, num: &LaurentPoly, den: &LaurentPoly) -> RationalFunction {
        if self.den == *den {
            return RationalFunction::canonical(&self.num + num, den.clone());
        }
        if let Some(k) = den.div_exact(&self.den) {
            return RationalFunction::canonical(&(&self.num * &k) + num, den.clone());
        }
        if let Some(k) = self.den.div_exact(den) {
            return RationalFunction::canonical(&self.num + &(num * &k), self.den.clone());
        }
        RationalFunction::canonical(&(&self.num * den) + &(num * &self.den), &self.den * den)
    }

    /// Substitute rational functions for variables, all at once.
    pub fn substitute(&self, bindings: &[(Var, RationalFunction)]) -> Result<RationalFunction> {
        let num = substitute_poly(&self.num, bindings)?;
        let den = substitute_poly(&self.den, bindings)?;
        num.checked_div(&den).map_err(|_| Error::DivisionByZero)
    }

    /// Replace each listed variable by its inverse.
    pub fn invert_vars(&self, vars: &[Var]) -> RationalFunction {
        RationalFunction::canonical(self.num.invert_vars(vars), self.den.invert_vars(vars))
    }

    /// Replace variables by monomials.
    pub fn substitute_monomials(&self, images: &[(Var, Monomial)]) -> Result<RationalFunction> {
        RationalFunction::new(self.num.substitute_monomials(images), self.den.substitute_monomials(images))
    }

    /// Evaluate some variables at rational values, leaving the rest symbolic.
    pub fn eval_partial(&self, point: &[(Var, BigRational)]) -> Result<RationalFunction> {
        let num = self.num.eval_partial(point).ok_or(Error::Pole)?;
        let den = self.den.eval_partial(point).ok_or(Error::Pole)?;
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(RationalFunction::canonical(num, den))
    }

    /// Exact value at a point covering every variable that occurs.
    pub fn eval(&self, point: &[(Var, BigRational)]) -> Result<BigRational> {
        let r = self.eval_partial(point)?;
        let n = r.num.as_constant();
        let d = r.den.as_constant();
        match (n, d) {
            (Some(n), Some(d)) => Ok(n / d),
            _ => Err(Error::InvalidArgument("evaluation point does not cover all variables".into())),
        }
    }

    pub fn used_vars(&self) -> [bool; super::var::NVARS] {
        let a = self.num.used_vars();
        let b = self.den.used_vars();
        std::array::from_fn(|i| a[i] || b[i])
    }
}

fn substitute_poly(p: &LaurentPoly, bindings: &[(Var, RationalFunction)]) -> Result<RationalFunction> {
    let mut acc = RationalFunction::zero();
    for m in p.monomials() {
        let mut rest = m.clone();
        let mut term = RationalFunction::one();
        for (v, f) in bindings {
            let k = rest.exps[v.index()];
            if k != 0 {
                rest.exps[v.index()] = 0;
                term = &term * &f.pow(k)?;
            }
        }
        term = &term * &RationalFunction::from_poly(LaurentPoly::from_monomial(rest));
        acc = &acc + &term;
    }
    Ok(acc)
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_parts(&rhs.num, &rhs.den)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_parts(&-&rhs.num, &rhs.den)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.mul_parts(&rhs.num, &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for RationalFunction {
    fn product<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::one(), |a, b| &a * &b)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(x: Var) -> LaurentPoly {
        LaurentPoly::var(x)
    }

    fn rf(n: LaurentPoly, d: LaurentPoly) -> RationalFunction {
        RationalFunction::new(n, d).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn geometric_factor() {
        let one = LaurentPoly::one();
        let a = RationalFunction::from_poly(&one - &v(Var::Q).pow(2));
        let b = rf(one.clone(), &one - &v(Var::Q));
        let p = &a * &b;
        assert_eq!(p.as_poly().unwrap(), &(&one + &v(Var::Q)));
    }

    #[test]
    fn inverse_pair() {
        let one = LaurentPoly::one();
        let qt2 = &v(Var::Q) * &v(Var::T2);
        let f = rf(&one - &(&v(Var::T1) * &v(Var::T2)), &one - &qt2);
        let g = &f * &RationalFunction::from_poly(&one - &qt2);
        assert_eq!(g.as_poly().unwrap(), &(&one - &(&v(Var::T1) * &v(Var::T2))));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero()).unwrap_err(), Error::DivisionByZero);
        assert!(RationalFunction::one().checked_div(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn canonical_shift_and_lead() {
        // (2q) / (2q^2 - 4q) -> 1/(q - 2)
        let num = v(Var::Q).scale(&rat(2));
        let den = &v(Var::Q).pow(2).scale(&rat(2)) - &v(Var::Q).scale(&rat(4));
        let f = rf(num, den);
        assert_eq!(f.den(), &(&v(Var::Q) - &LaurentPoly::from_int(2)));
        assert!(f.num().is_one());
    }

    #[test]
    fn substitution_examples() {
        let one = LaurentPoly::one();
        let t1t2 = &v(Var::T1) * &v(Var::T2);
        let f = RationalFunction::from_poly(t1t2.clone());
        let g = f.substitute(&[(Var::T1, RationalFunction::one())]).unwrap();
        assert_eq!(g, RationalFunction::var(Var::T2));

        let sym = RationalFunction::from_poly(&v(Var::Q) + &LaurentPoly::var_pow(Var::Q, -1));
        let inv = RationalFunction::from_poly(LaurentPoly::var_pow(Var::Q, -1));
        assert_eq!(sym.substitute(&[(Var::Q, inv)]).unwrap(), sym);

        let qt2 = &v(Var::Q) * &v(Var::T2);
        let den = &(&one - &qt2) * &(&one - &(&v(Var::Q).pow(2) * &t1t2));
        let h = rf(&one - &t1t2, den);
        let expect = rf(
            &one - &v(Var::T2),
            &(&one - &qt2) * &(&one - &(&v(Var::Q).pow(2) * &v(Var::T2))),
        );
        assert_eq!(h.substitute(&[(Var::T1, RationalFunction::one())]).unwrap(), expect);
    }

    #[test]
    fn substitution_to_zero_denominator_fails() {
        let one = LaurentPoly::one();
        let f = rf(one.clone(), &one - &v(Var::Q));
        assert!(f.substitute(&[(Var::Q, RationalFunction::one())]).is_err());
    }

    #[test]
    fn evaluation() {
        let f = RationalFunction::from_poly(&v(Var::Q) + &LaurentPoly::one());
        assert_eq!(f.eval(&[(Var::Q, rat(3))]).unwrap(), rat(4));
        let q = v(Var::Q);
        let g = RationalFunction::from_poly(&q + &(&(&q.pow(2) - &LaurentPoly::one()) * &v(Var::T1)));
        assert_eq!(g.eval(&[(Var::Q, rat(3)), (Var::T1, rat(1))]).unwrap(), rat(11));
        let h = rf(LaurentPoly::one(), &LaurentPoly::one() - &q);
        assert_eq!(h.eval(&[(Var::Q, rat(1))]).unwrap_err(), Error::Pole);
    }

    #[test]
    fn add_with_shared_denominator_factor() {
        let one = LaurentPoly::one();
        let a = &one - &v(Var::Q);
        let b = &one - &v(Var::T2);
        let x = rf(one.clone(), a.clone());
        let y = rf(one.clone(), &a * &b);
        let s = &x + &y;
        assert_eq!(s.den(), &(&a * &b).scale(&rat(1)));
        assert_eq!(&s - &y, x);
    }
}
