use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moduli-euler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> serde_json::Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn compact_genus_two_csv() {
    let text = stdout(&["chi", "compact", "--genus", "2", "--max-n", "7", "--format", "csv"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "genus,n,value");
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[1], "2,0,6");
    assert_eq!(lines[4], "2,3,181");
    assert_eq!(lines[8], "2,7,533019");
}

#[test]
fn open_methods_agree() {
    for (genus, n) in [(2, 0), (2, 5), (2, 9), (1, 3), (1, 7)] {
        let g = genus.to_string();
        let n = n.to_string();
        let values: Vec<serde_json::Value> = ["closed", "strata", "recursive"]
            .iter()
            .filter_map(|m| {
                let out = run(&["chi", "open", "--genus", &g, "--n", &n, "--method", m, "--format", "json"]);
                out.status.success().then(|| {
                    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
                    v[0]["value"].clone()
                })
            })
            .collect();
        assert!(values.len() >= 2, "genus {g} n {n}");
        assert!(values.windows(2).all(|w| w[0] == w[1]), "genus {g} n {n}: {values:?}");
    }
}

#[test]
fn series_coefficients_are_exact() {
    let text = stdout(&["series", "--name", "D", "--order", "6", "--output", "csv"]);
    assert!(text.lines().any(|l| l == "4,D,coeffs,7/24"));
    let egf = stdout(&["series", "--name", "K1", "--order", "5", "--format", "egf", "--output", "csv"]);
    let values: Vec<&str> = egf.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(values, ["0", "2", "4", "12", "49"]);
}

#[test]
fn json_matches_golden() {
    let out: serde_json::Value =
        serde_json::from_str(&stdout(&["chi", "compact", "--genus", "1", "--max-n", "4", "--format", "json"])).unwrap();
    assert_eq!(out, golden("chi_compact_g1.json"));
    let out: serde_json::Value =
        serde_json::from_str(&stdout(&["quotient", "m0-mod-sj", "7", "--j", "2", "--format", "json"])).unwrap();
    assert_eq!(out, golden("quotient_m0_sj.json"));
}

#[test]
fn oracle_agrees_with_quotient_table() {
    let oracle = stdout(&["oracle", "quotient", "--n", "7", "--group", "d4", "--format", "json"]);
    let oracle: serde_json::Value = serde_json::from_str(&oracle).unwrap();
    let table = stdout(&["quotient", "m0-mod-d4", "7", "--format", "json"]);
    let table: serde_json::Value = serde_json::from_str(&table).unwrap();
    assert_eq!(oracle[0]["value"], table[0]["value"]);
    assert_eq!(oracle[1]["kind"], "oracle-polynomial");
    assert_eq!(oracle[0]["inputs"]["order"], 8);
}

#[test]
fn trees_report_count_and_sum() {
    let text = stdout(&["oracle", "trees", "--n", "4", "--format", "csv"]);
    assert_eq!(text, "kind,n,value\ntree-count,4,26\ntree-contribution-sum,4,7\n");
}

#[test]
fn verify_passes() {
    let text = stdout(&["verify", "--suite", "strata"]);
    assert!(text.lines().all(|l| !l.starts_with("FAIL")));
    assert!(text.trim_end().ends_with("0 failed"));
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["chi", "open", "--genus", "3", "--n", "1"][..],
        &["chi", "open", "--genus", "0", "--n", "2"],
        &["quotient", "prod2-mod-klein", "4", "8"],
        &["quotient", "m0-mod-sj", "4", "--j", "5"],
        &["series", "--name", "K9"],
        &["oracle", "quotient", "--n", "6", "--group", "custom:(1 9)"],
        &["verify", "--suite", "nope"],
        &["chi"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
