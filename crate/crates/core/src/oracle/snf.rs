use super::{ElemDivisorType, PrimeLevel};

/// Exact p-adic valuation of an integer; `None` for zero.
pub fn valuation(x: i128, p: u64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let p = p as i128;
    let mut x = x;
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    Some(v)
}

fn capped_val(x: i64, p: i64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let mut x = x;
    let mut v = 0;
    while v < cap && x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

fn inverse_mod(a: i64, m: i64) -> i64 {
    let (mut r0, mut r1) = (m, a.rem_euclid(m));
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(m)
}

/// Elementary-divisor valuations of `m` over Z/p^N, capped at N, sorted.
///
/// Has `min(rows, cols)` entries.
pub fn p_adic_elementary_divisors(m: &[Vec<i64>], pl: &PrimeLevel) -> ElemDivisorType {
    let modulus = pl.modulus();
    let p = pl.p as i64;
    let cap = pl.level;
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(modulus)).collect()).collect();
    let mut out = Vec::with_capacity(rows.min(cols));
    for t in 0..rows.min(cols) {
        let mut best: Option<(u32, usize, usize)> = None;
        for (r, row) in a.iter().enumerate().skip(t) {
            for (c, &x) in row.iter().enumerate().skip(t) {
                let v = capped_val(x, p, cap);
                if v < cap && best.is_none_or(|b| v < b.0) {
                    best = Some((v, r, c));
                    if v == 0 {
                        break;
                    }
                }
            }
            if best.is_some_and(|b| b.0 == 0) {
                break;
            }
        }
        let Some((v, r, c)) = best else {
            out.extend(std::iter::repeat_n(cap, rows.min(cols) - t));
            break;
        };
        a.swap(t, r);
        for row in a.iter_mut() {
            row.swap(t, c);
        }
        let pv = p.pow(v);
        let unit_inv = inverse_mod(a[t][t] / pv, modulus) as i128;
        let md = modulus as i128;
        for r in t + 1..rows {
            if a[r][t] != 0 {
                let f = ((a[r][t] / pv) as i128 * unit_inv % md) as i64;
                for c in t..cols {
                    a[r][c] = ((a[r][c] as i128 - f as i128 * a[t][c] as i128).rem_euclid(md)) as i64;
                }
            }
        }
        for c in t + 1..cols {
            if a[t][c] != 0 {
                let f = ((a[t][c] / pv) as i128 * unit_inv % md) as i64;
                for row in a.iter_mut().skip(t) {
                    row[c] = ((row[c] as i128 - f as i128 * row[t] as i128).rem_euclid(md)) as i64;
                }
            }
        }
        out.push(v);
    }
    out.sort_unstable();
    ElemDivisorType(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_capping() {
        let pl = PrimeLevel::new(3, 2).unwrap();
        let m = vec![vec![1, 0, 0], vec![0, 3, 0], vec![0, 0, 27]];
        assert_eq!(p_adic_elementary_divisors(&m, &pl).0, vec![0, 1, 2]);
    }

    #[test]
    fn zero_matrix() {
        let pl = PrimeLevel::new(5, 1).unwrap();
        assert_eq!(p_adic_elementary_divisors(&[vec![0, 0], vec![0, 0]], &pl).0, vec![1, 1]);
    }

    #[test]
    fn antisymmetric_pairs() {
        let pl = PrimeLevel::new(5, 3).unwrap();
        assert_eq!(p_adic_elementary_divisors(&[vec![0, 5], vec![-5, 0]], &pl).0, vec![1, 1]);
    }

    #[test]
    fn non_diagonal() {
        // [[2, 4], [6, 8]] has Smith form diag(2, 4) over Z.
        let pl = PrimeLevel::new(2, 4).unwrap();
        assert_eq!(p_adic_elementary_divisors(&[vec![2, 4], vec![6, 8]], &pl).0, vec![1, 2]);
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(0, 3), None);
        assert_eq!(valuation(-18, 3), Some(2));
    }
}
