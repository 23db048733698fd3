//! Presentations of the lattices F_{n,δ}, G_n, H_n and their commutator matrices.
//!
//! Generators are indexed from 1: `x_1..x_a` span the abelianization and
//! `y_1..y_b` the derived lattice, with `y_k` ordered by the index map ω.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    F,
    G,
    H,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F => "F",
            Family::G => "G",
            Family::H => "H",
        })
    }
}

impl FromStr for Family {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            "H" | "h" => Ok(Family::H),
            _ => Err(invalid(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeFamily {
    pub family: Family,
    pub n: usize,
    pub delta: usize,
}

pub(crate) fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

impl LatticeFamily {
    pub fn new(family: Family, n: usize, delta: usize) -> Result<Self> {
        if n < 1 {
            return Err(invalid("n must be at least 1"));
        }
        if delta > 1 {
            return Err(invalid("delta must be 0 or 1"));
        }
        if family != Family::F && delta != 0 {
            return Err(invalid(format!("delta is fixed to 0 for {family}")));
        }
        Ok(LatticeFamily { family, n, delta })
    }

    pub fn f(n: usize, delta: usize) -> Result<Self> {
        Self::new(Family::F, n, delta)
    }

    pub fn g(n: usize) -> Result<Self> {
        Self::new(Family::G, n, 0)
    }

    pub fn h(n: usize) -> Result<Self> {
        Self::new(Family::H, n, 0)
    }

    /// Rank of the abelianization.
    pub fn a(&self) -> usize {
        match self.family {
            Family::F => 2 * self.n + self.delta,
            Family::G | Family::H => 2 * self.n,
        }
    }

    /// Rank of the derived lattice.
    pub fn b(&self) -> usize {
        let n = self.n as i64;
        (match self.family {
            Family::F => binom2(2 * n + self.delta as i64),
            Family::G => n * n,
            Family::H => binom2(n + 1),
        }) as usize
    }

    pub fn h_rank(&self) -> usize {
        self.a() + self.b()
    }

    /// All families here satisfy `r = a` and `z = b`.
    pub fn r(&self) -> usize {
        self.a()
    }

    pub fn z(&self) -> usize {
        self.b()
    }

    pub fn u_a(&self) -> usize {
        self.a() - 1
    }

    pub fn u_b(&self) -> usize {
        self.n
    }

    /// Index pairs `(i, j)` carrying a generator `y_{ij}`, in ω order.
    pub fn domain(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        match self.family {
            Family::F => {
                let a = self.a();
                (1..=a).flat_map(|i| (i + 1..=a).map(move |j| (i, j))).collect()
            }
            Family::G => (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect(),
            Family::H => (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect(),
        }
    }

    pub fn in_domain(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        match self.family {
            Family::F => 1 <= i && i < j && j <= self.a(),
            Family::G => (1..=n).contains(&i) && (1..=n).contains(&j),
            Family::H => 1 <= i && i <= j && j <= n,
        }
    }

    pub fn label(&self) -> String {
        match self.family {
            Family::F => format!("F_{{{},{}}}", self.n, self.delta),
            _ => format!("{}_{}", self.family, self.n),
        }
    }
}

impl fmt::Display for LatticeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::F => write!(f, "F({},{})", self.n, self.delta),
            _ => write!(f, "{}({})", self.family, self.n),
        }
    }
}

/// Position of `y_{ij}` among `y_1..y_b`.
pub fn omega(fam: &LatticeFamily, i: usize, j: usize) -> Result<usize> {
    if !fam.in_domain(i, j) {
        return Err(invalid(format!("({i},{j}) is outside the index domain of {fam}")));
    }
    let (i, j, n) = (i as i64, j as i64, fam.n as i64);
    let k = match fam.family {
        Family::F => (i - 1) * fam.a() as i64 - binom2(i + 1) + j,
        Family::G => (i - 1) * n + j,
        Family::H => (i - 1) * n - binom2(i) + j,
    };
    Ok(k as usize)
}

/// Structure constants `λ_{ij}^k` with both orders of each pair materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePresentation {
    pub family: LatticeFamily,
    pub h: usize,
    pub a: usize,
    pub b: usize,
    pub r: usize,
    pub z: usize,
    pub u_a: usize,
    pub u_b: usize,
    pub structure_constants: BTreeMap<(usize, usize, usize), i64>,
}

impl LatticePresentation {
    pub fn lambda(&self, i: usize, j: usize, k: usize) -> i64 {
        self.structure_constants.get(&(i, j, k)).copied().unwrap_or(0)
    }

    /// `[u, v]` for integer coordinate vectors of length `a`.
    pub fn bracket(&self, u: &[i64], v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.b];
        for (&(i, j, k), &c) in &self.structure_constants {
            out[k - 1] += c * u[i - 1] * v[j - 1];
        }
        out
    }
}

pub fn presentation(fam: &LatticeFamily) -> LatticePresentation {
    let n = fam.n;
    let mut sc = BTreeMap::new();
    let mut put = |i: usize, j: usize, k: usize| {
        sc.insert((i, j, k), 1);
        sc.insert((j, i, k), -1);
    };
    for (i, j) in fam.domain() {
        let k = omega(fam, i, j).expect("domain pair");
        match fam.family {
            Family::F => put(i, j, k),
            Family::G => put(i, n + j, k),
            Family::H => {
                put(i, n + j, k);
                if i != j {
                    put(j, n + i, k);
                }
            }
        }
    }
    LatticePresentation {
        family: *fam,
        h: fam.h_rank(),
        a: fam.a(),
        b: fam.b(),
        r: fam.r(),
        z: fam.z(),
        u_a: fam.u_a(),
        u_b: fam.u_b(),
        structure_constants: sc,
    }
}

/// Matrix of integer linear forms in variables indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormMatrix {
    pub rows: usize,
    pub cols: usize,
    pub nvars: usize,
    /// `entries[r][c]` lists `(var, coef)` pairs with nonzero coefficients.
    pub entries: Vec<Vec<Vec<(usize, i64)>>>,
    pub var_symbol: char,
}

impl LinearFormMatrix {
    fn zeros(rows: usize, cols: usize, nvars: usize, var_symbol: char) -> Self {
        LinearFormMatrix { rows, cols, nvars, entries: vec![vec![Vec::new(); cols]; rows], var_symbol }
    }

    fn add(&mut self, r: usize, c: usize, var: usize, coef: i64) {
        let cell = &mut self.entries[r][c];
        match cell.iter_mut().find(|(v, _)| *v == var) {
            Some(t) => t.1 += coef,
            None => cell.push((var, coef)),
        }
        cell.retain(|t| t.1 != 0);
        cell.sort_unstable();
    }

    pub fn entry(&self, r: usize, c: usize) -> &[(usize, i64)] {
        &self.entries[r][c]
    }

    pub fn transpose(&self) -> LinearFormMatrix {
        let mut t = LinearFormMatrix::zeros(self.cols, self.rows, self.nvars, self.var_symbol);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c][r] = self.entries[r][c].clone();
            }
        }
        t
    }

    pub fn evaluate(&self, point: &[i64]) -> Result<Vec<Vec<i64>>> {
        if point.len() != self.nvars {
            return Err(invalid(format!("point has length {}, expected {}", point.len(), self.nvars)));
        }
        Ok(self
            .entries
            .iter()
            .map(|row| row.iter().map(|cell| cell.iter().map(|&(v, c)| c * point[v - 1]).sum()).collect())
            .collect())
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let neg: Vec<(usize, i64)> = self.entries[c][r].iter().map(|&(v, k)| (v, -k)).collect();
                    self.entries[r][c] == neg
                })
            })
    }

    fn cell_text(&self, cell: &[(usize, i64)], latex: bool) -> String {
        if cell.is_empty() {
            return if latex { String::new() } else { "0".into() };
        }
        let mut s = String::new();
        for (k, &(v, c)) in cell.iter().enumerate() {
            let name = if latex { format!("{}_{{{}}}", self.var_symbol, v) } else { format!("{}{}", self.var_symbol, v) };
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            let mag = c.abs();
            if mag == 1 {
                s.push_str(&format!("{sign}{name}"));
            } else {
                s.push_str(&format!("{sign}{mag}{name}"));
            }
        }
        s
    }

    pub fn to_plain(&self) -> String {
        let cells: Vec<Vec<String>> =
            self.entries.iter().map(|row| row.iter().map(|c| self.cell_text(c, false)).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{pmatrix}\n");
        for (i, row) in self.entries.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|c| self.cell_text(c, true)).collect();
            out.push_str(&cells.join(" & "));
            if i + 1 < self.rows {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{pmatrix}");
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<Value>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| match cell.as_slice() {
                        [] => Value::Null,
                        [(v, c)] => json!({"var": v, "coef": c}),
                        many => Value::Array(many.iter().map(|(v, c)| json!({"var": v, "coef": c})).collect()),
                    })
                    .collect()
            })
            .collect();
        json!({"rows": self.rows, "cols": self.cols, "entries": entries})
    }
}

/// The a × b matrix with entry `(i, k) = Σ_j λ_{ij}^k X_j`.
pub fn a_matrix(fam: &LatticeFamily) -> LinearFormMatrix {
    let p = presentation(fam);
    let mut m = LinearFormMatrix::zeros(p.a, p.b, p.a, 'X');
    for (&(i, j, k), &c) in &p.structure_constants {
        m.add(i - 1, k - 1, j, c);
    }
    m
}

/// The a × a matrix with entry `(i, j) = Σ_k λ_{ij}^k Y_k`.
pub fn b_matrix(fam: &LatticeFamily) -> LinearFormMatrix {
    let p = presentation(fam);
    let mut m = LinearFormMatrix::zeros(p.a, p.a, p.b, 'Y');
    for (&(i, j, k), &c) in &p.structure_constants {
        m.add(i - 1, j - 1, k, c);
    }
    m
}

pub fn evaluate_matrix(m: &LinearFormMatrix, point: &[i64]) -> Result<Vec<Vec<i64>>> {
    m.evaluate(point)
}

/// Rank over the rationals.
pub fn rank_over_q(m: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = BigRational::one() / &rows[rank][c];
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] * &inv;
                for cc in c..ncols {
                    let d = &f * &rows[rank][cc];
                    rows[r][cc] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}
