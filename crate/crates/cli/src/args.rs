use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bizeta::oracle::DEFAULT_BUDGET;

#[derive(Parser, Debug)]
#[command(name = "bizeta", version, about = "Bivariate zeta functions of the F, G and H lattices", args_override_self = true)]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// key=value file with defaults for any long flag
    #[arg(long, global = true)]
    pub config: Option<String>,
    #[arg(long, global = true)]
    pub family: Option<String>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub delta: usize,
    /// A|B for matrix; cc|irr|k|twist for zeta and expand
    #[arg(long, global = true)]
    pub kind: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 3)]
    pub order: usize,
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// ring level N for oracles; quick|full for `verify all`
    #[arg(long, global = true)]
    pub level: Option<String>,
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exhaustive)]
    pub mode: Mode,
    #[arg(long, global = true, default_value_t = 500)]
    pub samples: u64,
    /// minor size for `oracle membership`
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// print the global product instead of the local factor (zeta --kind k)
    #[arg(long, global = true, value_enum)]
    pub global: Option<Global>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Latex,
    Plain,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Global {
    NumberField,
    Rational,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Print the A or B commutator matrix
    Matrix,
    /// Print a closed-form local zeta function
    Zeta,
    /// Expand a zeta function in T2
    Expand,
    /// Run a symbolic or combinatorial identity check
    Verify {
        #[arg(value_enum)]
        what: VerifyWhat,
    },
    /// Run a brute-force check over Z/p^N
    Oracle {
        #[arg(value_enum)]
        what: OracleWhat,
    },
    /// Write the statistics of every signed permutation
    DumpStats,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyWhat {
    Funceq,
    StatF,
    StatGh,
    Reiner,
    W0,
    Fpoly,
    Weyl,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleWhat {
    Census,
    Nir,
    Cc,
    Group,
    Irr,
    Minors,
    FirstRowMinors,
    Membership,
}

/// Turn `key=value` lines into leading global flags; command-line flags given later win.
pub fn config_args(path: &str) -> Result<Vec<String>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| format!("{path}:{}: expected key=value", lineno + 1))?;
        let (k, v) = (k.trim(), v.trim());
        if k == "config" {
            return Err(format!("{path}:{}: nested config", lineno + 1));
        }
        out.push(format!("--{k}"));
        out.push(v.to_string());
    }
    Ok(out)
}

/// Value of `--config` in raw arguments, if any.
pub fn find_config(argv: &[String]) -> Option<String> {
    let mut it = argv.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(v) = a.strip_prefix("--config=") {
            return Some(v.to_string());
        }
    }
    None
}
