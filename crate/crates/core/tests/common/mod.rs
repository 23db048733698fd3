#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use bizeta::exactalg::{LaurentPoly, RationalFunction, Var};
use bizeta::exactalg::rat;

/// Coxeter length by breadth-first search from the identity with the generators
/// `s_0` (negate the first entry) and `s_i` (swap entries i and i+1).
pub fn bfs_lengths(n: usize) -> HashMap<Vec<i32>, u32> {
    let start: Vec<i32> = (1..=n as i32).collect();
    let mut dist = HashMap::from([(start.clone(), 0u32)]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for g in 0..n {
            let mut v = w.clone();
            if g == 0 {
                v[0] = -v[0];
            } else {
                v.swap(g - 1, g);
            }
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Coefficients of a polynomial in `q`, `T1` evaluated at `q = p`.
pub fn at_q(f: &LaurentPoly, p: i64) -> LaurentPoly {
    RationalFunction::from_poly(f.clone())
        .eval_partial(&[(Var::Q, rat(p))])
        .expect("no pole")
        .as_poly()
        .expect("polynomial")
        .clone()
}
