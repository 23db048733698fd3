//! JSON and LaTeX encodings of polynomials and rational functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::poly::LaurentPoly;
use super::rational::RationalFunction;
use super::var::{Exps, Var, NVARS};
use crate::error::{Error, Result};

pub fn used_vars(f: &RationalFunction) -> Vec<Var> {
    let used = f.used_vars();
    Var::ALL.into_iter().filter(|v| used[v.index()]).collect()
}

fn poly_terms_json(p: &LaurentPoly, vars: &[Var]) -> Value {
    Value::Array(
        p.iter_desc()
            .map(|(e, c)| {
                json!({
                    "c": format!("{}/{}", c.numer(), c.denom()),
                    "e": vars.iter().map(|v| e[v.index()]).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

/// Encode over the given variable list; variables outside it must not occur.
pub fn rational_to_json_with(f: &RationalFunction, vars: &[Var]) -> Value {
    debug_assert!(used_vars(f).iter().all(|v| vars.contains(v)));
    json!({
        "vars": vars.iter().map(|v| v.name()).collect::<Vec<_>>(),
        "num": poly_terms_json(f.num(), vars),
        "den": poly_terms_json(f.den(), vars),
    })
}

pub fn rational_to_json(f: &RationalFunction) -> Value {
    rational_to_json_with(f, &used_vars(f))
}

fn parse_coeff(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn parse_terms(v: &Value, vars: &[Var]) -> Result<LaurentPoly> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("term list expected".into()))?;
    let mut p = LaurentPoly::zero();
    for t in arr {
        let c = t.get("c").and_then(Value::as_str).ok_or_else(|| Error::Parse("term without \"c\"".into()))?;
        let e = t.get("e").and_then(Value::as_array).ok_or_else(|| Error::Parse("term without \"e\"".into()))?;
        if e.len() != vars.len() {
            return Err(Error::Parse("exponent length does not match vars".into()));
        }
        let mut exps: Exps = [0; NVARS];
        for (v, x) in vars.iter().zip(e) {
            let x = x.as_i64().ok_or_else(|| Error::Parse("integer exponent expected".into()))?;
            exps[v.index()] = i32::try_from(x).map_err(|_| Error::Parse("exponent out of range".into()))?;
        }
        p.add_term(exps, parse_coeff(c)?);
    }
    Ok(p)
}

pub fn rational_from_json(v: &Value) -> Result<RationalFunction> {
    let vars = v
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"vars\"".into()))?
        .iter()
        .map(|x| x.as_str().ok_or_else(|| Error::Parse("variable name expected".into()))?.parse().map_err(Error::Parse))
        .collect::<Result<Vec<Var>>>()?;
    let num = parse_terms(v.get("num").ok_or_else(|| Error::Parse("missing \"num\"".into()))?, &vars)?;
    let den = parse_terms(v.get("den").ok_or_else(|| Error::Parse("missing \"den\"".into()))?, &vars)?;
    RationalFunction::new(num, den)
}

fn latex_monomial(e: &Exps) -> String {
    let mut s = String::new();
    for v in Var::ALL {
        match e[v.index()] {
            0 => {}
            1 => s.push_str(v.latex()),
            k => s.push_str(&format!("{}^{{{}}}", v.latex(), k)),
        }
    }
    s
}

fn latex_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn poly_to_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.iter_desc().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let m = latex_monomial(e);
        if m.is_empty() {
            out.push_str(&latex_coeff(&a));
        } else if a.is_one() {
            out.push_str(&m);
        } else {
            out.push_str(&latex_coeff(&a));
            out.push_str(&m);
        }
    }
    out
}

pub fn rational_to_latex(f: &RationalFunction) -> String {
    if f.den().is_one() {
        poly_to_latex(f.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", poly_to_latex(f.num()), poly_to_latex(f.den()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg() -> RationalFunction {
        let one = LaurentPoly::one();
        let q = LaurentPoly::var(Var::Q);
        let t1t2 = LaurentPoly::var(Var::T1) * LaurentPoly::var(Var::T2);
        let den = (&one - &(&q * &LaurentPoly::var(Var::T2))) * (&one - &(&q.pow(2) * &t1t2));
        RationalFunction::new(&one - &t1t2, den).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let f = heisenberg();
        let j = rational_to_json(&f);
        assert_eq!(j["vars"], json!(["q", "T1", "T2"]));
        assert_eq!(j["den"][0], json!({"c": "1/1", "e": [3, 1, 2]}));
        assert_eq!(rational_from_json(&j).unwrap(), f);
    }

    #[test]
    fn json_terms_descending() {
        let j = rational_to_json(&heisenberg());
        let exps: Vec<Vec<i64>> = j["num"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t["e"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect())
            .collect();
        let mut sorted = exps.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(exps, sorted);
    }

    #[test]
    fn latex_layout() {
        let p = LaurentPoly::one() - LaurentPoly::var_pow(Var::Q, 2) * LaurentPoly::var(Var::T1) * LaurentPoly::var(Var::T2);
        assert_eq!(poly_to_latex(&p), "-q^{2}T_1T_2 + 1");
    }
}
