//! Exact arithmetic: Laurent polynomials, rational functions, q-analogs and series.

mod format;
mod poly;
mod qanalog;
mod rational;
mod series;
mod var;

pub use format::{poly_to_latex, rational_from_json, rational_to_json, rational_to_json_with, rational_to_latex, used_vars};
pub use poly::{LaurentPoly, Monomial};
pub use qanalog::{qbinomial, qbinomial_multi, qpochhammer, SubsetI};
pub use rational::RationalFunction;
pub use series::{series_expand, SeriesTruncation};
pub use var::{Exps, Var, NVARS};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer as an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact value of a rational function at a point.
pub fn eval_rational(f: &RationalFunction, point: &[(Var, BigRational)]) -> crate::Result<BigRational> {
    f.eval(point)
}
