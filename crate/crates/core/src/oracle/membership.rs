use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::minors::combinations;
use crate::error::{invalid, Result};
use crate::lattices::{a_matrix, LatticeFamily};
use crate::verdict::Verdict;

type Exps = Vec<u8>;
type IntPoly = BTreeMap<Exps, i64>;

fn poly_mul_term(p: &IntPoly, var: usize, coeff: i64, out: &mut IntPoly) {
    for (e, &c) in p {
        let mut e = e.clone();
        e[var] += 1;
        let slot = out.entry(e).or_insert(0);
        *slot += c * coeff;
    }
    out.retain(|_, c| *c != 0);
}

/// Laplace expansion along the first row; entries are `Some((var, ±1))` or zero.
fn det_symbolic(rows: &[Vec<Option<(usize, i64)>>], used: &mut Vec<bool>, depth: usize, nvars: usize) -> IntPoly {
    if depth == rows.len() {
        let mut one = IntPoly::new();
        one.insert(vec![0; nvars], 1);
        return one;
    }
    let mut out = IntPoly::new();
    let mut sign = 1;
    for c in 0..rows.len() {
        if used[c] {
            continue;
        }
        if let Some((v, coeff)) = rows[depth][c] {
            used[c] = true;
            let sub = det_symbolic(rows, used, depth + 1, nvars);
            used[c] = false;
            poly_mul_term(&sub, v, sign * coeff, &mut out);
        }
        sign = -sign;
    }
    out
}

fn targets(n: usize, k: usize) -> Vec<Exps> {
    let mut out = Vec::new();
    for omega in 0..=n.min(k) {
        let lambda = k - omega;
        if lambda > n {
            continue;
        }
        for left in multisets(n, omega) {
            for right in multisets(n, lambda) {
                let mut e = vec![0u8; 2 * n];
                for &i in &left {
                    e[i] += 1;
                }
                for &j in &right {
                    e[n + j] += 1;
                }
                out.push(e);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn show(e: &[u8]) -> String {
    let mut parts = Vec::new();
    for (v, &d) in e.iter().enumerate() {
        for _ in 0..d {
            parts.push(format!("X{}", v + 1));
        }
    }
    parts.join("*")
}

/// Every monomial `X_{i_1}..X_{i_ω} X_{n+j_1}..X_{n+j_λ}` with `ω + λ = k` appears up to sign as a
/// k×k minor of `A` for the family `G_n`.
pub fn verify_minor_membership(n: usize, k: usize, budget: u128) -> Result<Verdict> {
    if !(1..=3).contains(&n) || k == 0 || k >= 2 * n {
        return Err(invalid("membership search needs 1 ≤ n ≤ 3 and 0 < k < 2n"));
    }
    let fam = LatticeFamily::g(n)?;
    let am = a_matrix(&fam);
    let nvars = 2 * n;
    let row_sets = combinations(fam.a(), k);
    let col_sets = combinations(fam.b(), k);
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> =
        row_sets.iter().flat_map(|r| col_sets.iter().map(move |c| (r, c))).collect();
    let searched = pairs.len().min(budget.min(usize::MAX as u128) as usize);
    let found: BTreeSet<Exps> = pairs[..searched]
        .par_iter()
        .filter_map(|(rs, cs)| {
            let rows: Vec<Vec<Option<(usize, i64)>>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| am.entry(r, c).first().map(|&(v, co)| (v - 1, co))).collect())
                .collect();
            let d = det_symbolic(&rows, &mut vec![false; k], 0, nvars);
            match d.iter().next() {
                Some((e, c)) if d.len() == 1 && c.abs() == 1 => Some(e.clone()),
                _ => None,
            }
        })
        .collect();
    let wanted = targets(n, k);
    let mut bad = Vec::new();
    for t in &wanted {
        if !found.contains(t) {
            bad.push(format!("no k×k minor equals ±{}", show(t)));
        }
    }
    if searched < pairs.len() {
        bad.push(format!("{} submatrices left unsearched", pairs.len() - searched));
    }
    Ok(Verdict::from_failures(wanted.len() as u64, bad))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_variables() {
        assert!(verify_minor_membership(2, 1, 1_000_000).unwrap().ok);
    }

    #[test]
    fn target_count() {
        // ω + λ = 2 with n = 2: (2,0), (1,1), (0,2)
        assert_eq!(targets(2, 2).len(), 3 + 4 + 3);
    }

    #[test]
    fn partial_search_is_reported() {
        let v = verify_minor_membership(2, 2, 3).unwrap();
        assert!(!v.ok);
        assert!(v.counterexamples.iter().any(|c| c.contains("unsearched")));
    }
}
