mod args;
mod suite;

use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use args::{config_args, find_config, Cli, Cmd, Format, Global, Mode, OracleWhat, Opts, VerifyWhat};
use bizeta::exactalg::{rational_to_json, series_expand, LaurentPoly, RationalFunction, SubsetI, Var};
use bizeta::lattices::{a_matrix, b_matrix, LatticeFamily};
use bizeta::oracle::{self, MinorMode, PrimeLevel};
use bizeta::weyl::{self, enumerate_bn, stats, STAT_COLUMNS};
use bizeta::zeta::{self, GlobalStyle, ZetaKind};
use bizeta::{Error, Verdict};

pub enum Fail {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => Fail::Mismatch(e.to_string()),
            _ => Fail::Usage(e.to_string()),
        }
    }
}

pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail::Usage(msg.into())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn family(o: &Opts) -> Result<LatticeFamily, Fail> {
    let f = o.family.as_deref().ok_or_else(|| usage("--family is required"))?;
    let n = o.n.ok_or_else(|| usage("--n is required"))?;
    Ok(LatticeFamily::new(f.parse()?, n, o.delta)?)
}

fn prime_level(o: &Opts) -> Result<PrimeLevel, Fail> {
    let p = o.p.ok_or_else(|| usage("--p is required"))?;
    let level = o.level.as_deref().ok_or_else(|| usage("--level is required"))?;
    let level: u32 = level.parse().map_err(|_| usage(format!("--level {level:?} is not a ring level")))?;
    Ok(PrimeLevel::new(p, level)?)
}

fn seed(o: &Opts) -> Result<u64, Fail> {
    o.seed.ok_or_else(|| usage("sampled modes need --seed"))
}

fn zeta_kind(o: &Opts) -> Result<ZetaKind, Fail> {
    Ok(o.kind.as_deref().unwrap_or("cc").parse()?)
}

fn reject_csv(o: &Opts) -> Result<(), Fail> {
    if o.format == Format::Csv {
        return Err(usage("csv output is only available for dump-stats"));
    }
    Ok(())
}

fn verdict_output(o: &Opts, v: &Verdict) -> Output {
    let text = match o.format {
        Format::Json => pretty(&v.to_json()),
        _ => {
            let mut s = format!("{} ({} checked)", if v.ok { "verified" } else { "MISMATCH" }, v.checked);
            for c in &v.counterexamples {
                s.push_str(&format!("\n  {c}"));
            }
            s
        }
    };
    Output { text, ok: v.ok }
}

fn local_zeta(fam: &LatticeFamily, kind: ZetaKind) -> Result<zeta::LocalZeta, Fail> {
    Ok(match kind {
        ZetaKind::Cc | ZetaKind::Irr => zeta::zeta_closed(fam, kind)?,
        ZetaKind::K => zeta::specialize_class_number(&zeta::zeta_cc_closed(fam))?,
        ZetaKind::Twist => zeta::specialize_twist(&zeta::zeta_irr_closed(fam))?,
    })
}

fn cmd_matrix(o: &Opts) -> Result<Output, Fail> {
    reject_csv(o)?;
    let fam = family(o)?;
    let m = match o.kind.as_deref().unwrap_or("A") {
        "A" | "a" => a_matrix(&fam),
        "B" | "b" => b_matrix(&fam),
        other => return Err(usage(format!("matrix kind {other:?} is not A or B"))),
    };
    Ok(Output::ok(match o.format {
        Format::Json => pretty(&m.to_json()),
        Format::Latex => m.to_latex(),
        _ => m.to_plain().trim_end().to_string(),
    }))
}

fn cmd_zeta(o: &Opts) -> Result<Output, Fail> {
    reject_csv(o)?;
    let fam = family(o)?;
    let kind = zeta_kind(o)?;
    if let Some(g) = o.global {
        if kind != ZetaKind::K {
            return Err(usage("--global needs --kind k"));
        }
        let style = match g {
            Global::NumberField => GlobalStyle::NumberField,
            Global::Rational => GlobalStyle::Rational,
        };
        let s = zeta::emit_global(&fam, style);
        return Ok(Output::ok(match o.format {
            Format::Json => pretty(&json!({"family": fam.to_string(), "global": s})),
            _ => s,
        }));
    }
    let z = local_zeta(&fam, kind)?;
    Ok(Output::ok(match o.format {
        Format::Json => pretty(&z.to_json()),
        Format::Latex => z.to_latex(),
        _ => z.value.to_string(),
    }))
}

fn cmd_expand(o: &Opts) -> Result<Output, Fail> {
    reject_csv(o)?;
    let fam = family(o)?;
    let kind = zeta_kind(o)?;
    if !matches!(kind, ZetaKind::Cc | ZetaKind::Irr | ZetaKind::K) {
        return Err(usage("expand needs --kind cc, irr or k"));
    }
    let z = local_zeta(&fam, kind)?;
    let series = series_expand(&z.value, Var::T2, o.order)?;
    let mut coeffs: Vec<LaurentPoly> = series.coefficients.clone();
    if let Some(p) = o.p {
        for c in &mut coeffs {
            let at = RationalFunction::from_poly(c.clone()).eval_partial(&[(Var::Q, bizeta::exactalg::rat(p as i64))])?;
            *c = at.as_poly().cloned().ok_or_else(|| usage("evaluation left a denominator"))?;
        }
    }
    let text = match o.format {
        Format::Json => pretty(&json!({
            "family": fam.to_string(),
            "kind": kind.name(),
            "var": "T2",
            "q": o.p,
            "coefficients": coeffs.iter().enumerate().map(|(k, c)| json!({
                "power": k,
                "value": rational_to_json(&RationalFunction::from_poly(c.clone())),
            })).collect::<Vec<_>>(),
        })),
        Format::Latex => coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("[T_2^{{{k}}}]\\colon {}", bizeta::exactalg::poly_to_latex(c)))
            .collect::<Vec<_>>()
            .join("\n"),
        _ => coeffs.iter().enumerate().map(|(k, c)| format!("T2^{k}: {c}")).collect::<Vec<_>>().join("\n"),
    };
    Ok(Output::ok(text))
}

fn fpoly_verdict(fam: &LatticeFamily) -> Result<Verdict, Error> {
    let mut bad = Vec::new();
    let subsets = SubsetI::all(fam.n);
    for s in &subsets {
        let table = zeta::f_poly(fam, s)?;
        let weyl = RationalFunction::from_poly(weyl::f_weyl(fam, s)?);
        if table != weyl {
            bad.push(format!("I={:?}: {table} vs {weyl}", s.elems()));
        }
    }
    Ok(Verdict::from_failures(subsets.len() as u64, bad))
}

fn weyl_verdict(fam: &LatticeFamily) -> Result<Verdict, Error> {
    let w = weyl::zeta_irr_weyl(fam)?;
    let c = zeta::zeta_irr_closed(fam).value;
    Ok(if w == c { Verdict::pass(1) } else { Verdict::from_failures(1, vec![format!("Weyl sum {w} vs closed form {c}")]) })
}

fn funceq_verdict(fam: &LatticeFamily, kind: ZetaKind) -> Result<Verdict, Error> {
    let v = zeta::verify_funceq(fam, kind)?;
    Ok(if v.ok { Verdict::pass(1) } else { Verdict::from_failures(1, vec![format!("difference {}", v.witness)]) })
}

fn cmd_verify(o: &Opts, what: VerifyWhat) -> Result<Output, Fail> {
    reject_csv(o)?;
    let n = || o.n.ok_or_else(|| usage("--n is required"));
    let v = match what {
        VerifyWhat::Funceq => {
            let kind = zeta_kind(o)?;
            if !matches!(kind, ZetaKind::Cc | ZetaKind::Irr) {
                return Err(usage("funceq needs --kind cc or irr"));
            }
            funceq_verdict(&family(o)?, kind)?
        }
        VerifyWhat::StatF => weyl::verify_stat_f(n()?, o.delta)?,
        VerifyWhat::StatGh => weyl::verify_stat_gh(n()?)?,
        VerifyWhat::Reiner => weyl::verify_reiner(n()?)?,
        VerifyWhat::W0 => weyl::verify_w0_identity(&family(o)?)?,
        VerifyWhat::Fpoly => fpoly_verdict(&family(o)?)?,
        VerifyWhat::Weyl => weyl_verdict(&family(o)?)?,
        VerifyWhat::All => {
            let level = match o.level.as_deref().unwrap_or("quick") {
                "quick" => suite::Level::Quick,
                "full" => suite::Level::Full,
                other => return Err(usage(format!("--level {other:?} is not quick or full"))),
            };
            return Ok(suite::run(level, o.format));
        }
    };
    Ok(verdict_output(o, &v))
}

fn cmd_oracle(o: &Opts, what: OracleWhat) -> Result<Output, Fail> {
    reject_csv(o)?;
    let budget = o.budget;
    let plain = |v: Value| -> Output { Output::ok(pretty(&v)) };
    Ok(match what {
        OracleWhat::Census => plain(oracle::census_b(&family(o)?, &prime_level(o)?, budget)?.to_json()),
        OracleWhat::Nir => {
            let (v, cells) = oracle::verify_nir(&family(o)?, &prime_level(o)?, budget)?;
            let mut j = v.to_json();
            j["cells"] = cells
                .iter()
                .map(|c| json!({"I": c.subset, "r": c.r, "observed": c.observed.to_string(), "expected": c.expected.to_string()}))
                .collect();
            Output { text: pretty(&j), ok: v.ok }
        }
        OracleWhat::Cc => plain(oracle::cc_counts_via_a(&family(o)?, &prime_level(o)?, budget)?.to_json()),
        OracleWhat::Group => plain(oracle::direct_group_oracle(&family(o)?, &prime_level(o)?, budget)?.to_json()),
        OracleWhat::Irr => {
            let fam = family(o)?;
            let pl = prime_level(o)?;
            let c = oracle::zeta_irr_coefficient_oracle(&fam, &pl, budget)?;
            plain(json!({
                "family": fam.to_string(),
                "p": pl.p,
                "N": pl.level,
                "coefficient": rational_to_json(&RationalFunction::from_poly(c)),
            }))
        }
        OracleWhat::Minors => {
            let mode = match o.mode {
                Mode::Exhaustive => MinorMode::Exhaustive,
                Mode::Sampled => MinorMode::Sampled { count: o.samples, seed: seed(o)? },
            };
            verdict_output(o, &oracle::check_minor_norm_profiles(&family(o)?, &prime_level(o)?, mode, budget)?)
        }
        OracleWhat::FirstRowMinors => {
            let pl = prime_level(o)?;
            let cols = o.n.unwrap_or(3);
            verdict_output(o, &oracle::check_first_row_minors(pl.p, pl.level, cols, o.samples, seed(o)?)?)
        }
        OracleWhat::Membership => {
            let n = o.n.ok_or_else(|| usage("--n is required"))?;
            let k = o.k.ok_or_else(|| usage("--k is required"))?;
            verdict_output(o, &oracle::verify_minor_membership(n, k, budget)?)
        }
    })
}

fn cmd_dump_stats(o: &Opts) -> Result<Output, Fail> {
    let n = o.n.ok_or_else(|| usage("--n is required"))?;
    let perms: Vec<_> = enumerate_bn(n)?.collect();
    let text = match o.format {
        Format::Csv => {
            let mut s = format!("w,{},descents", STAT_COLUMNS.join(","));
            for w in &perms {
                let st = stats(w);
                let vals: Vec<String> = st.values().iter().map(u32::to_string).collect();
                let ds: Vec<String> = st.descents.iter().map(usize::to_string).collect();
                s.push_str(&format!("\n\"{w}\",{},\"{}\"", vals.join(","), ds.join(" ")));
            }
            s
        }
        Format::Json => pretty(&Value::Array(
            perms
                .iter()
                .map(|w| {
                    let mut j = stats(w).to_json();
                    j["w"] = json!(w.window());
                    j
                })
                .collect(),
        )),
        _ => return Err(usage("dump-stats writes csv or json")),
    };
    Ok(Output::ok(text))
}

fn run(cli: &Cli) -> Result<Output, Fail> {
    let o = &cli.opts;
    match cli.cmd {
        Cmd::Matrix => cmd_matrix(o),
        Cmd::Zeta => cmd_zeta(o),
        Cmd::Expand => cmd_expand(o),
        Cmd::Verify { what } => cmd_verify(o, what),
        Cmd::Oracle { what } => cmd_oracle(o, what),
        Cmd::DumpStats => cmd_dump_stats(o),
    }
}

fn main() -> ExitCode {
    let mut argv: Vec<String> = std::env::args().collect();
    if let Some(path) = find_config(&argv[1..]) {
        match config_args(&path) {
            Ok(extra) => {
                argv.splice(1..1, extra);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
    }
}
