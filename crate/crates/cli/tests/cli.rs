use std::io::Write;
use std::process::{Command, Output};

fn bizeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bizeta")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn matrix_latex_f20() {
    let o = bizeta(&["matrix", "--family", "F", "--n", "2", "--delta", "0", "--kind", "A", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    let want = "\\begin{pmatrix}
X_{2} & X_{3} & X_{4} &  &  &  \\\\
-X_{1} &  &  & X_{3} & X_{4} &  \\\\
 & -X_{1} &  & -X_{2} &  & X_{4} \\\\
 &  & -X_{1} &  & -X_{2} & -X_{3}
\\end{pmatrix}
";
    assert_eq!(stdout(&o), want);
}

#[test]
fn matrix_json_cells() {
    let o = bizeta(&["matrix", "--family", "G", "--n", "2", "--kind", "B"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v.to_string().contains("\"var\""));
}

#[test]
fn funceq_h2_cc() {
    let o = bizeta(&["verify", "funceq", "--family", "H", "--n", "2", "--kind", "cc"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ok"], true);
}

#[test]
fn heisenberg_classes() {
    let o = bizeta(&["oracle", "cc", "--family", "F", "--n", "1", "--p", "3", "--level", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["total"], "11");
    assert_eq!(v["classes"][0]["size"], "1");
    assert_eq!(v["classes"][0]["count"], "3");
    assert_eq!(v["classes"][1]["size"], "3");
    assert_eq!(v["classes"][1]["count"], "8");
}

#[test]
fn census_json_shape() {
    let o = bizeta(&["oracle", "census", "--family", "G", "--n", "2", "--p", "3", "--level", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["N"], 1);
    assert!(v["counts"].as_array().unwrap().iter().all(|c| c["type"].is_array()));
}

#[test]
fn expand_at_prime() {
    let o = bizeta(&["expand", "--family", "F", "--n", "1", "--order", "1", "--p", "3", "--format", "plain"]);
    assert_eq!(stdout(&o), "T2^0: 1\nT2^1: 8*T1 + 3\n");
}

#[test]
fn sampled_mode_needs_seed() {
    let o = bizeta(&["oracle", "minors", "--family", "G", "--n", "2", "--p", "3", "--level", "1", "--mode", "sampled"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bizeta(&[
        "oracle", "minors", "--family", "G", "--n", "2", "--p", "3", "--level", "1", "--mode", "sampled", "--seed", "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bizeta(&["matrix", "--family", "Q", "--n", "2"]).status.code(), Some(2));
    assert_eq!(bizeta(&["zeta", "--family", "F"]).status.code(), Some(2));
    assert_eq!(bizeta(&["bogus"]).status.code(), Some(2));
    assert_eq!(bizeta(&["zeta", "--family", "F", "--n", "1", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(bizeta(&["oracle", "census", "--family", "F", "--n", "2", "--delta", "1", "--p", "3", "--level", "2"]).status.code(), Some(2));
}

#[test]
fn unfinished_search_exits_one() {
    let o = bizeta(&["oracle", "membership", "--n", "2", "--k", "2", "--budget", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["ok"], false);
}

#[test]
fn config_file_with_flag_override() {
    let path = std::env::temp_dir().join(format!("bizeta-cli-{}.cfg", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# defaults\nfamily=F\nn=2\nformat=plain").unwrap();
    let cfg = path.to_str().unwrap();
    let from_file = bizeta(&["--config", cfg, "zeta"]);
    let direct = bizeta(&["zeta", "--family", "F", "--n", "2", "--format", "plain"]);
    assert_eq!(stdout(&from_file), stdout(&direct));
    let overridden = bizeta(&["--config", cfg, "zeta", "--n", "1"]);
    let direct = bizeta(&["zeta", "--family", "F", "--n", "1", "--format", "plain"]);
    assert_eq!(stdout(&overridden), stdout(&direct));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn dump_stats_csv() {
    let o = bizeta(&["dump-stats", "--n", "3", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("w,inv,neg,nsp,ell,L,des,maj,rmaj,sigma,descents"));
    assert_eq!(lines.count(), 48);
}

#[test]
fn output_is_deterministic() {
    let args = ["oracle", "nir", "--family", "H", "--n", "2", "--p", "3", "--level", "2"];
    let a = bizeta(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, bizeta(&args).stdout);
}

#[test]
fn quick_suite_passes() {
    let o = bizeta(&["verify", "all", "--level", "quick", "--format", "plain"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}
