use std::fmt;
use std::str::FromStr;

pub const NVARS: usize = 6;

/// Exponent tuple in the order q, T1, T2, X, Z, t.
pub type Exps = [i32; NVARS];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    T1,
    T2,
    X,
    Z,
    T,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::T1, Var::T2, Var::X, Var::Z, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T1 => "T1",
            Var::T2 => "T2",
            Var::X => "X",
            Var::Z => "Z",
            Var::T => "t",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T1 => "T_1",
            Var::T2 => "T_2",
            Var::X => "X",
            Var::Z => "Z",
            Var::T => "t",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL.into_iter().find(|v| v.name() == s).ok_or_else(|| format!("unknown variable {s:?}"))
    }
}
