use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{check_budget, chunks, decode, valuation, PrimeLevel};
use crate::error::{invalid, Result};
use crate::lattices::{a_matrix, Family, LatticeFamily};
use crate::verdict::Verdict;

const MAX_REPORTED: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorMode {
    Exhaustive,
    Sampled { count: u64, seed: u64 },
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Bareiss determinant.
pub(crate) fn det_i128(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k {
        if m[c][c] == 0 {
            match (c + 1..k).find(|&r| m[r][c] != 0) {
                Some(r) => {
                    m.swap(c, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for r in c + 1..k {
            for j in c + 1..k {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
        }
        prev = m[c][c];
    }
    sign * m[k - 1][k - 1]
}

fn min_val(vals: impl Iterator<Item = i128>, p: u64) -> Option<u32> {
    vals.filter_map(|v| valuation(v, p)).min()
}

/// Minimal valuations `v_1, ..., v_{max}` of the k×k minors, `None` when all vanish.
fn minor_profile(m: &[Vec<i64>], p: u64, kmax: usize, rows: &[Vec<Vec<usize>>], cols: &[Vec<Vec<usize>>]) -> Vec<Option<u32>> {
    let mut out = vec![Some(0)];
    for k in 1..=kmax {
        let mut best: Option<u32> = None;
        'outer: for rs in &rows[k] {
            for cs in &cols[k] {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                if let Some(v) = valuation(det_i128(sub), p) {
                    best = Some(best.map_or(v, |b| b.min(v)));
                    if v == 0 {
                        break 'outer;
                    }
                }
            }
        }
        out.push(best);
    }
    out
}

fn ratio(profile: &[Option<u32>], k: usize) -> Option<Option<u32>> {
    let prev = profile[k - 1]?;
    Some(profile[k].map(|v| v - prev))
}

fn show(v: Option<u32>) -> String {
    v.map_or("inf".into(), |x| x.to_string())
}

fn check_point(fam: &LatticeFamily, x: &[i64], m: &[Vec<i64>], p: u64, tabs: &Tables) -> Vec<String> {
    let a = fam.a();
    let n = fam.n;
    let prof = minor_profile(m, p, a - 1, &tabs.rows, &tabs.cols);
    let mut bad = Vec::new();
    let small = match fam.family {
        Family::F => a - 1,
        Family::G | Family::H => n,
    };
    for k in 1..=small {
        if prof[k] != Some(0) {
            bad.push(format!("x={x:?}: v_{k} = {}, expected 0", show(prof[k])));
        }
    }
    let pv = |vals: &[i64]| min_val(vals.iter().map(|&v| v as i128), p);
    let target = match fam.family {
        Family::F => return bad,
        Family::G => {
            let mm = pv(&x[..n]);
            let nn = pv(&x[n..2 * n]);
            match (mm, nn) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            }
        }
        Family::H => min_val(
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| {
                x[i] as i128 * x[n + j] as i128 - x[j] as i128 * x[n + i] as i128
            }),
            p,
        ),
    };
    for k in n + 1..a {
        if let Some(d) = ratio(&prof, k) {
            if d != target {
                bad.push(format!("x={x:?}: v_{k} - v_{} = {}, expected {}", k - 1, show(d), show(target)));
            }
        }
    }
    bad
}

struct Tables {
    rows: Vec<Vec<Vec<usize>>>,
    cols: Vec<Vec<Vec<usize>>>,
}

/// Finite-level check of the minor valuation profiles of `A(x)` at primitive points.
pub fn check_minor_norm_profiles(fam: &LatticeFamily, pl: &PrimeLevel, mode: MinorMode, budget: u128) -> Result<Verdict> {
    if fam.n > 3 || pl.level > 3 {
        return Err(invalid("minor profiles need n ≤ 3 and N ≤ 3"));
    }
    let a = fam.a();
    let am = a_matrix(fam);
    let tabs = Tables {
        rows: (0..a).map(|k| combinations(a, k)).collect(),
        cols: (0..a).map(|k| combinations(fam.b(), k)).collect(),
    };
    let m = pl.modulus();
    let p = pl.p;
    let primitive = |x: &[i64]| x.iter().any(|&v| v % p as i64 != 0);
    let (checked, mut bad): (u64, Vec<String>) = match mode {
        MinorMode::Exhaustive => {
            let total = check_budget(m, a, budget)?;
            let parts: Vec<Result<(u64, Vec<String>)>> = chunks(total)
                .into_par_iter()
                .map(|(lo, hi)| {
                    let mut x = vec![0i64; a];
                    let mut c = 0;
                    let mut bad = Vec::new();
                    for idx in lo..hi {
                        decode(idx, m, &mut x);
                        if !primitive(&x) {
                            continue;
                        }
                        c += 1;
                        bad.extend(check_point(fam, &x, &am.evaluate(&x)?, p, &tabs));
                    }
                    Ok((c, bad))
                })
                .collect();
            let mut c = 0;
            let mut bad = Vec::new();
            for part in parts {
                let (pc, pb) = part?;
                c += pc;
                bad.extend(pb);
            }
            (c, bad)
        }
        MinorMode::Sampled { count, seed } => {
            if count as u128 > budget {
                return Err(crate::error::Error::BudgetExceeded { needed: count as u128, budget });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut bad = Vec::new();
            let mut c = 0;
            while c < count {
                let x: Vec<i64> = (0..a).map(|_| rng.gen_range(0..m)).collect();
                if !primitive(&x) {
                    continue;
                }
                c += 1;
                bad.extend(check_point(fam, &x, &am.evaluate(&x)?, p, &tabs));
            }
            (c, bad)
        }
    };
    let failures = bad.len();
    bad.truncate(MAX_REPORTED);
    if failures > MAX_REPORTED {
        bad.push(format!("... {} more", failures - MAX_REPORTED));
    }
    Ok(Verdict::from_failures(checked, bad))
}

/// Random `2 × cols` matrices with `x_11 ≡ 1` and all other entries in `(p)`: some first-row
/// minor `M_{1j}` attains the minimal valuation among all `M_{ij}`.
pub fn check_first_row_minors(p: u64, level: u32, cols: usize, samples: u64, seed: u64) -> Result<Verdict> {
    let pl = PrimeLevel::new(p, level)?;
    if cols < 2 {
        return Err(invalid("need at least two columns"));
    }
    let m = pl.modulus();
    let pi = p as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..samples {
        let mut x = [vec![0i64; cols], vec![0i64; cols]];
        for (r, row) in x.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                let t = pi * rng.gen_range(0..m / pi);
                *e = if r == 0 && c == 0 { 1 + t } else { t };
            }
        }
        let minor = |i: usize, j: usize| x[0][i] as i128 * x[1][j] as i128 - x[0][j] as i128 * x[1][i] as i128;
        let all = min_val((0..cols).flat_map(|i| (i + 1..cols).map(move |j| (i, j))).map(|(i, j)| minor(i, j)), p);
        let first = min_val((1..cols).map(|j| minor(0, j)), p);
        if all != first {
            bad.push(format!("{x:?}: min over all minors {}, over first-row minors {}", show(all), show(first)));
        }
    }
    Ok(Verdict::from_failures(samples, bad))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss() {
        assert_eq!(det_i128(vec![vec![2, 1], vec![4, 3]]), 2);
        assert_eq!(det_i128(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]]), -5);
        assert_eq!(det_i128(vec![vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn heisenberg_profile() {
        let fam = LatticeFamily::f(1, 0).unwrap();
        let v = check_minor_norm_profiles(&fam, &PrimeLevel::new(3, 2).unwrap(), MinorMode::Exhaustive, 1000).unwrap();
        assert!(v.ok);
        assert_eq!(v.checked, 72);
    }

    #[test]
    fn first_row_small_sample() {
        assert!(check_first_row_minors(3, 2, 3, 50, 7).unwrap().ok);
    }
}
