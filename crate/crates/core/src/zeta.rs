//! Closed-form local zeta functions and their specializations.
//!
//! All local factors live in the variables `q`, `T1 = q^{-s1}` and `T2 = q^{-s2}`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{invalid, Result};
use crate::exactalg::{
    qbinomial_multi, qpochhammer, rational_to_json_with, rational_to_latex, LaurentPoly, Monomial, RationalFunction,
    Var,
};
use crate::lattices::{binom2, Family, LatticeFamily};

pub use crate::exactalg::SubsetI;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZetaKind {
    Cc,
    Irr,
    K,
    Twist,
}

impl ZetaKind {
    pub fn name(self) -> &'static str {
        match self {
            ZetaKind::Cc => "cc",
            ZetaKind::Irr => "irr",
            ZetaKind::K => "k",
            ZetaKind::Twist => "twist",
        }
    }

    pub fn vars(self) -> &'static [Var] {
        match self {
            ZetaKind::Cc | ZetaKind::Irr => &[Var::Q, Var::T1, Var::T2],
            ZetaKind::K => &[Var::Q, Var::T2],
            ZetaKind::Twist => &[Var::Q, Var::T],
        }
    }
}

impl fmt::Display for ZetaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ZetaKind {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cc" => Ok(ZetaKind::Cc),
            "irr" => Ok(ZetaKind::Irr),
            "k" => Ok(ZetaKind::K),
            "twist" => Ok(ZetaKind::Twist),
            _ => Err(invalid(format!("unknown zeta kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalZeta {
    pub family: LatticeFamily,
    pub kind: ZetaKind,
    pub value: RationalFunction,
}

impl LocalZeta {
    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.family.to_string(),
            "n": self.family.n,
            "delta": self.family.delta,
            "kind": self.kind.name(),
            "value": rational_to_json_with(&self.value, self.kind.vars()),
        })
    }

    pub fn to_latex(&self) -> String {
        rational_to_latex(&self.value)
    }
}

/// `q^a T1^b T2^c`.
pub(crate) fn qt(a: i32, b: i32, c: i32) -> Monomial {
    Monomial::from_pairs(&[(Var::Q, a), (Var::T1, b), (Var::T2, c)])
}

fn om(m: Monomial) -> LaurentPoly {
    LaurentPoly::one_minus(&m)
}

pub fn abar(fam: &LatticeFamily, i: usize) -> Result<i64> {
    if i > fam.n {
        return Err(invalid(format!("index {i} outside [0, {}]", fam.n)));
    }
    let (n, i, d) = (fam.n as i64, i as i64, fam.delta as i64);
    Ok(match fam.family {
        Family::F => binom2(2 * n + d) - binom2(2 * i + d) + 2 * i + d,
        Family::G => n * n - i * i + 2 * i,
        Family::H => binom2(n + 1) - binom2(i + 1) + 2 * i,
    })
}

/// `x_i = q^{ā(i)} T1^{n-i} T2`.
pub fn x_monomial(fam: &LatticeFamily, i: usize) -> Monomial {
    qt(abar(fam, i).expect("index in range") as i32, (fam.n - i) as i32, 1)
}

fn xm(k: i32) -> Monomial {
    Monomial::var_pow(Var::X, k)
}

/// Numerator weight of the subset `I` in the representation zeta function, as a function of X.
pub fn f_poly(fam: &LatticeFamily, subset: &SubsetI) -> Result<RationalFunction> {
    let n = fam.n;
    if subset.n() != n {
        return Err(invalid(format!("subset built for n = {} used with n = {n}", subset.n())));
    }
    let Some(&i1) = subset.elems().first() else {
        return Ok(RationalFunction::one());
    };
    let d = fam.delta as i32;
    Ok(match fam.family {
        Family::F => {
            let b = qbinomial_multi(n, subset)?.dilate(Var::X, 2);
            let p = qpochhammer(&xm(2 * (i1 as i32 + d) + 1), &xm(2), n - i1);
            RationalFunction::from_poly(&b * &p)
        }
        Family::G => {
            let b = qbinomial_multi(n, subset)?;
            let p = qpochhammer(&xm(i1 as i32 + 1), &xm(1), n - i1);
            RationalFunction::from_poly(&b * &p)
        }
        Family::H => {
            let mu = subset.mu();
            let den: LaurentPoly = mu[1..].iter().map(|&m| qpochhammer(&xm(2), &xm(2), m / 2)).product();
            let p = qpochhammer(&xm(i1 as i32 + 1), &xm(1), n - i1);
            RationalFunction::new(p, den)?
        }
    })
}

/// Evaluate a function of X at `X = q^{-1}`.
pub(crate) fn at_q_inverse(f: &RationalFunction) -> RationalFunction {
    f.substitute_monomials(&[(Var::X, Monomial::var_pow(Var::Q, -1))]).expect("nonzero denominator")
}

fn g_or_h_at_one(fam: &LatticeFamily) -> LatticeFamily {
    if fam.family != Family::F && fam.n == 1 {
        LatticeFamily { family: Family::F, n: 1, delta: 0 }
    } else {
        *fam
    }
}

pub fn zeta_cc_closed(fam: &LatticeFamily) -> LocalZeta {
    let eff = g_or_h_at_one(fam);
    let n = eff.n as i32;
    let (num, den) = match eff.family {
        Family::F => {
            let m = 2 * n + eff.delta as i32;
            let c = binom2(m as i64) as i32;
            let num = om(qt(binom2(m as i64 - 1) as i32, m - 1, 1));
            let den = om(qt(c, 0, 1)) * om(qt(c + 1, m - 1, 1));
            (num, den)
        }
        Family::G => {
            let c = 2 * binom2(n as i64) as i32;
            let n2 = n * n;
            let num = om(qt(c, n, 1)) * om(qt(c + 1, 2 * n - 1, 1))
                + LaurentPoly::from(qt(n2, n, 1)) * om(qt(-n, 0, 0)) * om(qt(-(n - 1), n - 1, 0));
            let den = om(qt(n2, 0, 1)) * om(qt(n2, n, 1)) * om(qt(n2 + 1, 2 * n - 1, 1));
            (num, den)
        }
        Family::H => {
            let c = binom2(n as i64) as i32;
            let e = binom2(n as i64 + 1) as i32;
            let num = om(qt(c, n, 1)) * om(qt(c + 2, 2 * n - 1, 1))
                + LaurentPoly::from(qt(e, n, 1)) * om(qt(-n + 1, 0, 0)) * om(qt(-(n - 1), n - 1, 0));
            let den = om(qt(e, 0, 1)) * om(qt(e + 1, n, 1)) * om(qt(e + 1, 2 * n - 1, 1));
            (num, den)
        }
    };
    LocalZeta { family: *fam, kind: ZetaKind::Cc, value: RationalFunction::new(num, den).expect("nonzero") }
}

pub fn zeta_irr_closed(fam: &LatticeFamily) -> LocalZeta {
    let n = fam.n;
    let xs: Vec<Monomial> = (0..=n).map(|i| x_monomial(fam, i)).collect();
    let terms: Vec<RationalFunction> = SubsetI::all(n)
        .into_par_iter()
        .map(|s| {
            let weight = at_q_inverse(&f_poly(fam, &s).expect("valid subset"));
            let mut p = LaurentPoly::one();
            for (i, x) in xs.iter().enumerate().take(n) {
                p = if s.contains(i) { p.mul_monomial(x) } else { &p * &om(x.clone()) };
            }
            &weight * &RationalFunction::from_poly(p)
        })
        .collect();
    let num: RationalFunction = terms.into_iter().sum();
    let den: LaurentPoly = xs.iter().map(|x| om(x.clone())).product();
    let value = num.checked_div(&RationalFunction::from_poly(den)).expect("nonzero");
    LocalZeta { family: *fam, kind: ZetaKind::Irr, value }
}

pub fn zeta_closed(fam: &LatticeFamily, kind: ZetaKind) -> Result<LocalZeta> {
    match kind {
        ZetaKind::Cc => Ok(zeta_cc_closed(fam)),
        ZetaKind::Irr => Ok(zeta_irr_closed(fam)),
        ZetaKind::K => specialize_class_number(&zeta_cc_closed(fam)),
        ZetaKind::Twist => specialize_twist(&zeta_irr_closed(fam)),
    }
}

/// Set `s1 = 0`, i.e. `T1 = 1`.
pub fn specialize_class_number(z: &LocalZeta) -> Result<LocalZeta> {
    if !matches!(z.kind, ZetaKind::Cc | ZetaKind::Irr) {
        return Err(invalid("class-number specialization needs a cc or irr zeta function"));
    }
    let value = z.value.eval_partial(&[(Var::T1, BigRational::one())])?;
    Ok(LocalZeta { family: z.family, kind: ZetaKind::K, value })
}

/// Multiply by `1 - q^r T2`, then set `T2 = q^{-r}` and `T1 = q^2 t`.
pub fn specialize_twist(z: &LocalZeta) -> Result<LocalZeta> {
    if z.kind != ZetaKind::Irr {
        return Err(invalid("twist specialization needs an irr zeta function"));
    }
    let r = z.family.r() as i32;
    let cleared = &z.value * &RationalFunction::from_poly(om(qt(r, 0, 1)));
    let value = cleared.substitute_monomials(&[
        (Var::T2, Monomial::var_pow(Var::Q, -r)),
        (Var::T1, Monomial::from_pairs(&[(Var::Q, 2), (Var::T, 1)])),
    ])?;
    Ok(LocalZeta { family: z.family, kind: ZetaKind::Twist, value })
}

/// Which variables the functional-equation check inverts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inversion {
    /// `q`, `T1`, `T2` all inverted (s1, s2 held fixed).
    Full,
    /// Only `q` inverted, `T1`, `T2` held fixed.
    QOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunceqVerdict {
    pub ok: bool,
    pub h: usize,
    /// `Z(inverted) + q^h T2 Z`, zero exactly when the identity holds.
    pub witness: RationalFunction,
}

/// Check `Z|inverted = -q^h T2 Z` for an arbitrary function of q, T1, T2.
pub fn check_funceq(f: &RationalFunction, h: usize, inversion: Inversion) -> FunceqVerdict {
    let inv = match inversion {
        Inversion::Full => f.invert_vars(&[Var::Q, Var::T1, Var::T2]),
        Inversion::QOnly => f.invert_vars(&[Var::Q]),
    };
    let factor = RationalFunction::from_poly(LaurentPoly::from(qt(h as i32, 0, 1)));
    let rhs = -(&factor * f);
    let ok = inv == rhs;
    let witness = if ok { RationalFunction::zero() } else { &inv - &rhs };
    FunceqVerdict { ok, h, witness }
}

pub fn verify_funceq(fam: &LatticeFamily, kind: ZetaKind) -> Result<FunceqVerdict> {
    verify_funceq_with(fam, kind, Inversion::Full)
}

pub fn verify_funceq_with(fam: &LatticeFamily, kind: ZetaKind, inversion: Inversion) -> Result<FunceqVerdict> {
    let z = match kind {
        ZetaKind::Cc => zeta_cc_closed(fam),
        ZetaKind::Irr => zeta_irr_closed(fam),
        _ => return Err(invalid("functional equation is checked for cc and irr only")),
    };
    Ok(check_funceq(&z.value, fam.h_rank(), inversion))
}

/// Shifts `(A, B, C)` in `ζ_K(s-A) ζ_K(s-B) / ζ_K(s-C)` for type F.
pub fn dedekind_shifts_f(fam: &LatticeFamily) -> (i64, i64, i64) {
    let m = 2 * fam.n as i64 + fam.delta as i64;
    (binom2(m) + 1, binom2(m), binom2(m - 1))
}

/// The product of local Dedekind factors above, in `q`, `T2`.
pub fn dedekind_quotient_local(fam: &LatticeFamily) -> RationalFunction {
    let (a, b, c) = dedekind_shifts_f(fam);
    let t = |k: i64| om(qt(k as i32, 0, 1));
    RationalFunction::new(t(c), t(a) * t(b)).expect("nonzero")
}

/// The local class-number factor of types G and H (n ≥ 2), in `q`, `T2`.
pub fn class_number_local_gh(fam: &LatticeFamily) -> Result<RationalFunction> {
    let n = fam.n as i32;
    if fam.family == Family::F || n < 2 {
        return Err(invalid("needs G or H with n >= 2"));
    }
    let (num, den) = if fam.family == Family::G {
        let c = 2 * binom2(n as i64) as i32;
        let n2 = n * n;
        let num = om(qt(c, 0, 1)) * om(qt(c + 1, 0, 1))
            + LaurentPoly::from(qt(n2, 0, 1)) * om(qt(-n, 0, 0)) * om(qt(-n + 1, 0, 0));
        (num, om(qt(n2, 0, 1)).pow(2) * om(qt(n2 + 1, 0, 1)))
    } else {
        let c = binom2(n as i64) as i32;
        let e = binom2(n as i64 + 1) as i32;
        let num = om(qt(c, 0, 1)) * om(qt(c + 2, 0, 1)) + LaurentPoly::from(qt(e, 0, 1)) * om(qt(-n + 1, 0, 0)).pow(2);
        (num, om(qt(e, 0, 1)) * om(qt(e + 1, 0, 1)).pow(2))
    };
    RationalFunction::new(num, den)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalStyle {
    /// Dedekind zeta of a general number field K.
    NumberField,
    /// Riemann zeta, K = Q.
    Rational,
}

fn shifted(name: &str, k: i64) -> String {
    if k == 0 {
        format!("{name}(s)")
    } else {
        format!("{name}(s-{k})")
    }
}

/// Symbolic global class-number zeta function.
pub fn emit_global(fam: &LatticeFamily, style: GlobalStyle) -> String {
    let eff = g_or_h_at_one(fam);
    if eff.family == Family::F {
        let name = match style {
            GlobalStyle::NumberField => "ζ_K",
            GlobalStyle::Rational => "ζ",
        };
        let (a, b, c) = dedekind_shifts_f(&eff);
        return format!("{}{}/{}", shifted(name, a), shifted(name, b), shifted(name, c));
    }
    let local = class_number_local_gh(&eff).expect("n >= 2");
    let t = local.substitute_monomials(&[(Var::T2, Monomial::var_pow(Var::T, 1))]).expect("nonzero");
    let primes = match style {
        GlobalStyle::NumberField => "∏_𝔭",
        GlobalStyle::Rational => "∏_p",
    };
    format!("{primes} ({}) / ({}), with q = |O:𝔭| and t = q^(-s)", t.num(), t.den())
}
