use serde_json::json;

use bizeta::lattices::{a_matrix, LatticeFamily};
use bizeta::oracle::{self, MinorMode, PrimeLevel, DEFAULT_BUDGET};
use bizeta::weyl;
use bizeta::zeta::ZetaKind;
use bizeta::{Error, Verdict};

use crate::args::Format;
use crate::{fpoly_verdict, funceq_verdict, weyl_verdict, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

type Check = (String, Box<dyn Fn() -> Result<Verdict, Error>>);

fn families(max_n: usize) -> Vec<LatticeFamily> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(LatticeFamily::f(n, 0).unwrap());
        out.push(LatticeFamily::f(n, 1).unwrap());
        out.push(LatticeFamily::g(n).unwrap());
        out.push(LatticeFamily::h(n).unwrap());
    }
    out
}

fn golden() -> Result<Verdict, Error> {
    let cases = [
        (LatticeFamily::f(2, 0)?, "X2 X3 X4 0 0 0 -X1 0 0 X3 X4 0 0 -X1 0 -X2 0 X4 0 0 -X1 0 -X2 -X3"),
        (
            LatticeFamily::g(3)?,
            "X4 X5 X6 0 0 0 0 0 0 0 0 0 X4 X5 X6 0 0 0 0 0 0 0 0 0 X4 X5 X6 -X1 0 0 -X2 0 0 -X3 0 0 \
             0 -X1 0 0 -X2 0 0 -X3 0 0 0 -X1 0 0 -X2 0 0 -X3",
        ),
        (
            LatticeFamily::h(3)?,
            "X4 X5 X6 0 0 0 0 X4 0 X5 X6 0 0 0 X4 0 X5 X6 -X1 -X2 -X3 0 0 0 0 -X1 0 -X2 -X3 0 0 0 -X1 0 -X2 -X3",
        ),
    ];
    let mut bad = Vec::new();
    for (fam, want) in &cases {
        let got = a_matrix(fam).to_plain();
        if got.split_whitespace().ne(want.split_whitespace()) {
            bad.push(format!("{fam} A matrix differs"));
        }
    }
    Ok(Verdict::from_failures(cases.len() as u64, bad))
}

fn checks(level: Level) -> Vec<Check> {
    let (weyl_n, sym_n) = match level {
        Level::Quick => (2, 2),
        Level::Full => (4, 3),
    };
    let mut out: Vec<Check> = vec![("golden commutator matrices".into(), Box::new(golden))];
    for fam in families(weyl_n) {
        out.push((format!("table vs Weyl polynomials {fam}"), Box::new(move || fpoly_verdict(&fam))));
        out.push((format!("length complement {fam}"), Box::new(move || weyl::verify_w0_identity(&fam))));
    }
    for n in 1..=weyl_n {
        for d in 0..=1 {
            out.push((format!("statF n={n} delta={d}"), Box::new(move || weyl::verify_stat_f(n, d))));
        }
        if n >= 2 {
            out.push((format!("statGH n={n}"), Box::new(move || weyl::verify_stat_gh(n))));
        }
    }
    let reiner_n = if level == Level::Full { 6 } else { 3 };
    for n in 1..=reiner_n {
        out.push((format!("sign-twisted descents n={n}"), Box::new(move || weyl::verify_reiner(n))));
    }
    for fam in families(sym_n) {
        for kind in [ZetaKind::Cc, ZetaKind::Irr] {
            out.push((format!("functional equation {fam} {}", kind.name()), Box::new(move || funceq_verdict(&fam, kind))));
        }
        out.push((format!("Weyl sum vs closed form {fam}"), Box::new(move || weyl_verdict(&fam))));
    }
    let levels: &[(u64, u32)] = match level {
        Level::Quick => &[(3, 1)],
        Level::Full => &[(3, 1), (3, 2), (5, 1)],
    };
    let census_fams: Vec<LatticeFamily> = families(2).into_iter().filter(|f| f.n == 1 || f.delta == 0).collect();
    for fam in census_fams {
        for &(p, n) in levels {
            let pl = PrimeLevel::new(p, n).unwrap();
            out.push((format!("census {fam} {pl}"), Box::new(move || Ok(oracle::verify_nir(&fam, &pl, DEFAULT_BUDGET)?.0))));
        }
    }
    for fam in [LatticeFamily::f(1, 0).unwrap(), LatticeFamily::g(2).unwrap(), LatticeFamily::h(2).unwrap()] {
        let pl = PrimeLevel::new(3, 1).unwrap();
        out.push((
            format!("group vs commutator classes {fam} {pl}"),
            Box::new(move || {
                let a = oracle::direct_group_oracle(&fam, &pl, DEFAULT_BUDGET)?;
                let b = oracle::cc_counts_via_a(&fam, &pl, DEFAULT_BUDGET)?;
                Ok(if a.classes == b.classes {
                    Verdict::pass(1)
                } else {
                    Verdict::from_failures(1, vec![format!("{:?} vs {:?}", a.classes, b.classes)])
                })
            }),
        ));
    }
    let minor_level = if level == Level::Full { 2 } else { 1 };
    for fam in [LatticeFamily::f(2, 0).unwrap(), LatticeFamily::g(2).unwrap(), LatticeFamily::h(2).unwrap()] {
        let pl = PrimeLevel::new(3, minor_level).unwrap();
        out.push((
            format!("minor profiles {fam} {pl}"),
            Box::new(move || oracle::check_minor_norm_profiles(&fam, &pl, MinorMode::Exhaustive, DEFAULT_BUDGET)),
        ));
    }
    out.push(("first-row minors 2x3".into(), Box::new(|| oracle::check_first_row_minors(3, 3, 3, 500, 20_240_601))));
    let member_n = if level == Level::Full { 3 } else { 2 };
    for k in 1..2 * member_n {
        out.push((format!("minor membership G_{member_n} k={k}"), Box::new(move || oracle::verify_minor_membership(member_n, k, DEFAULT_BUDGET))));
    }
    out
}

pub fn run(level: Level, format: Format) -> Output {
    let mut rows = Vec::new();
    let mut all_ok = true;
    for (name, check) in checks(level) {
        let (ok, checked, detail) = match check() {
            Ok(v) => (v.ok, v.checked, v.counterexamples),
            Err(e) => (false, 0, vec![e.to_string()]),
        };
        all_ok &= ok;
        rows.push((name, ok, checked, detail));
    }
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "level": if level == Level::Quick { "quick" } else { "full" },
            "ok": all_ok,
            "checks": rows.iter().map(|(name, ok, checked, detail)| json!({
                "name": name, "ok": ok, "checked": checked, "counterexamples": detail,
            })).collect::<Vec<_>>(),
        }))
        .expect("serializable"),
        _ => rows
            .iter()
            .map(|(name, ok, checked, detail)| {
                let mut s = format!("{} {name} ({checked} checked)", if *ok { "PASS" } else { "FAIL" });
                for d in detail {
                    s.push_str(&format!("\n    {d}"));
                }
                s
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Output { text, ok: all_ok }
}
