//! Truncated power-series expansion of a rational function in one variable.

use super::poly::LaurentPoly;
use super::rational::RationalFunction;
use super::var::Var;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTruncation {
    pub var: Var,
    pub order: usize,
    /// Coefficients of `var^0 ..= var^order`.
    pub coefficients: Vec<LaurentPoly>,
}

impl SeriesTruncation {
    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coefficients[k]
    }

    /// `sum_k c_k var^k` as a single polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c * &LaurentPoly::var_pow(self.var, k as i32))
            .sum()
    }
}

pub fn series_expand(f: &RationalFunction, var: Var, order: usize) -> Result<SeriesTruncation> {
    let num = f.num();
    let den = f.den();
    let pole = || Error::SeriesPole(var.name().to_string());
    if num.degree_range(var).is_some_and(|(lo, _)| lo < 0) || den.degree_range(var).is_some_and(|(lo, _)| lo < 0) {
        return Err(pole());
    }
    let d0 = den.coeff_of(var, 0);
    if d0.is_zero() {
        return Err(pole());
    }
    let dmax = den.degree_range(var).map_or(0, |(_, hi)| hi as usize);
    let d: Vec<LaurentPoly> = (0..=dmax.min(order)).map(|j| den.coeff_of(var, j as i32)).collect();
    let mut coefficients: Vec<LaurentPoly> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut rhs = num.coeff_of(var, k as i32);
        for j in 1..=k.min(d.len() - 1) {
            if !d[j].is_zero() {
                rhs -= &(&d[j] * &coefficients[k - j]);
            }
        }
        let c = rhs.div_exact(&d0).ok_or_else(|| {
            Error::InvalidArgument(format!("coefficient of {}^{k} is not a Laurent polynomial", var.name()))
        })?;
        coefficients.push(c);
    }
    Ok(SeriesTruncation { var, order, coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> LaurentPoly {
        LaurentPoly::var(x)
    }

    #[test]
    fn geometric() {
        let one = LaurentPoly::one();
        let f = RationalFunction::new(one.clone(), &one - &(&v(Var::Q) * &v(Var::T2))).unwrap();
        let s = series_expand(&f, Var::T2, 2).unwrap();
        assert_eq!(s.coefficients, vec![one.clone(), v(Var::Q), v(Var::Q).pow(2)]);
    }

    #[test]
    fn heisenberg_cc_first_coefficient() {
        let one = LaurentPoly::one();
        let q = v(Var::Q);
        let t1t2 = &v(Var::T1) * &v(Var::T2);
        let den = &(&one - &(&q * &v(Var::T2))) * &(&one - &(&q.pow(2) * &t1t2));
        let f = RationalFunction::new(&one - &t1t2, den).unwrap();
        let s = series_expand(&f, Var::T2, 1).unwrap();
        assert!(s.coeff(0).is_one());
        assert_eq!(s.coeff(1), &(&q + &(&(&q.pow(2) - &one) * &v(Var::T1))));
    }

    #[test]
    fn constant_and_pole() {
        let s = series_expand(&RationalFunction::one(), Var::T2, 3).unwrap();
        assert_eq!(s.coefficients.len(), 4);
        assert!(s.coefficients[1..].iter().all(|c| c.is_zero()));
        let f = RationalFunction::new(LaurentPoly::one(), v(Var::T2)).unwrap();
        assert!(matches!(series_expand(&f, Var::T2, 2), Err(Error::SeriesPole(_))));
    }
}
