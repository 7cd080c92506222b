use ideform::multilin::Cochain;
use ideform_cli::run;
use serde_json::Value;
use std::io::Write;
use std::process::Command;

fn code(args: &[&str]) -> i32 {
    run(args.iter().copied()).code
}

fn json_out(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = run(a);
    let v: Value = serde_json::from_str(&out.output).expect("output re-parses");
    (out.code, v)
}

#[test]
fn documented_invocations() {
    assert_eq!(code(&["validate", "--corpus", "heisenberg3"]), 0);
    assert_eq!(code(&["kuranishi", "--corpus", "heisenberg3", "--ideal", "center", "--eta", r#"[["1","0"]]"#]), 1);
    assert_eq!(code(&["certify", "--corpus", "sl2xsl2", "--ideal", "factor1", "--method", "h1"]), 0);
    assert_eq!(code(&["certify", "--corpus", "heisenberg3", "--ideal", "center", "--method", "whitehead"]), 1);
    assert_eq!(code(&["les-check", "--corpus", "heisenberg3", "--ideal", "center", "--max-degree", "1"]), 0);
    assert_eq!(code(&["mc-check", "--corpus", "heisenberg3", "--ideal", "center", "--phi", r#"[["0","0"]]"#]), 0);
    assert_eq!(code(&["mc-check", "--corpus", "heisenberg3", "--ideal", "center", "--phi", r#"[["1","0"]]"#]), 1);
}

#[test]
fn exit_codes_ignore_format() {
    let cases: [&[&str]; 5] = [
        &["validate", "--corpus", "sl2"],
        &["kuranishi", "--corpus", "heisenberg3", "--ideal", "center", "--eta", r#"[["0","1"]]"#],
        &["certify", "--corpus", "sl2_plus_center", "--ideal", "center", "--method", "whitehead"],
        &["cohomology", "--corpus", "nowhere"],
        &["scan", "--corpus", "solvable2", "--ideal", "derived", "--step", "1/2"],
    ];
    for args in cases {
        let plain = run(args.iter().copied());
        let mut with = args.to_vec();
        with.push("--json");
        assert_eq!(plain.code, run(with).code, "{args:?}");
    }
}

#[test]
fn reports_round_trip() {
    let (c, v) = json_out(&["kuranishi", "--corpus", "heisenberg3", "--ideal", "center", "--eta", r#"[["1","0"]]"#]);
    assert_eq!(c, 1);
    assert_eq!(v["class_is_zero"], false);
    assert_eq!(v["complement"], "pivot");
    let cocycle = Cochain::from_json(&v["cocycle"], 3, 2).unwrap();
    assert!(!cocycle.is_zero());
    assert_eq!(Cochain::from_json(&cocycle.to_json(), 3, 2).unwrap(), cocycle);
    let (c, v) = json_out(&["cohomology", "--corpus", "heisenberg3", "--ideal", "center", "--max-degree", "3"]);
    assert_eq!(c, 0);
    let dims: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|r| r["dim_H"].as_u64().unwrap()).collect();
    assert_eq!(dims, [2, 4, 4, 2]);
    let (_, v) = json_out(&["certify", "--corpus", "heisenberg3", "--ideal", "center", "--method", "h1"]);
    assert_eq!(v["dims"]["tangent_dim"], 2);
}

#[test]
fn scans() {
    let (c, v) = json_out(&["scan", "--corpus", "heisenberg3", "--ideal", "center"]);
    assert_eq!(c, 0);
    assert_eq!(v["solutions"], serde_json::json!([[["0", "0"]]]));
    let (_, v) = json_out(&["scan", "--corpus", "abelian3", "--ideal", "e1"]);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 81);
    let (_, v) = json_out(&["scan", "--corpus", "sl2", "--ideal", "whole"]);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 1);
    assert_eq!(code(&["scan", "--corpus", "abelian3", "--ideal", "e1", "--step", "3/4"]), 2);
}

#[test]
fn input_errors_exit_two() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "{{\"dim\": 2,\n  \"brackets\": [oops]}}").unwrap();
    let path = f.path().to_str().unwrap();
    let out = run(["validate", "--algebra", path]);
    assert_eq!(out.code, 2);
    assert!(out.output.contains("line 2"), "{}", out.output);
    assert_eq!(code(&["bogus"]), 2);
    assert_eq!(code(&["validate"]), 2);
    assert_eq!(code(&["kuranishi", "--corpus", "heisenberg3", "--ideal", "center", "--eta", "[[1]]"]), 2);
    assert_eq!(code(&["certify", "--corpus", "heisenberg3", "--ideal", "center", "--method", "vibes"]), 2);
    assert_eq!(code(&["certify", "--corpus", "heisenberg3", "--ideal", "e1"]), 2);
    let (c, v) = json_out(&["cohomology", "--corpus", "heisenberg3", "--ideal", "center", "--max-degree", "9"]);
    assert_eq!(c, 2);
    assert!(v["error"].as_str().unwrap().contains("degree"), "{v}");
    let out = run(["scan", "--corpus", "sl2xsl2", "--ideal", "factor1", "--step", "1/8", "--radius", "4"]);
    assert_eq!(out.code, 2);
    assert!(out.output.contains("grid points"), "{}", out.output);
}

#[test]
fn algebra_files() {
    let dir = tempfile::tempdir().unwrap();
    let entry = ideform::corpus::load("heisenberg3").unwrap().to_json();
    let path = dir.path().join("h.json");
    std::fs::write(&path, entry.to_string()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(code(&["certify", "--algebra", p, "--ideal", "center", "--method", "h1"]), 1);
    let bare = dir.path().join("bare.json");
    std::fs::write(&bare, entry["algebra"].to_string()).unwrap();
    let ideal = dir.path().join("i.json");
    std::fs::write(&ideal, r#"{"ambient": 3, "basis": [["0", "0", "1"]]}"#).unwrap();
    let args = ["validate", "--algebra", bare.to_str().unwrap(), "--ideal", ideal.to_str().unwrap()];
    assert_eq!(code(&args), 0);
    std::fs::write(&ideal, r#"{"ambient": 3, "basis": [["1", "0", "0"]]}"#).unwrap();
    assert_eq!(code(&args), 1);
    let comp = dir.path().join("c.json");
    std::fs::write(&comp, r#"{"ambient": 3, "basis": [["1", "0", "0"], ["0", "1", "1"]]}"#).unwrap();
    let (c, v) = json_out(&["scan", "--corpus", "heisenberg3", "--ideal", "center", "--complement", comp.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 1);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_ideform");
    let st = Command::new(bin).args(["validate", "--corpus", "heisenberg3"]).output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    let st = Command::new(bin)
        .args(["kuranishi", "--corpus", "heisenberg3", "--ideal", "center", "--eta", r#"[["1","1"]]"#, "--json"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&st.stdout).unwrap();
    assert_eq!(v["verb"], "kuranishi");
    let st = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(st.status.code(), Some(2));
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

    #[test]
    fn heisenberg_kuranishi_codes(a in -3i64..=3, b in -3i64..=3) {
        let eta = format!(r#"[["{a}","{b}"]]"#);
        let args = ["kuranishi", "--corpus", "heisenberg3", "--ideal", "center", "--eta", eta.as_str()];
        let plain = run(args);
        let (c, v) = json_out(&args);
        proptest::prop_assert_eq!(plain.code, c);
        proptest::prop_assert_eq!(c == 0, a == 0 && b == 0);
        proptest::prop_assert_eq!(v["class_is_zero"].as_bool(), Some(c == 0));
    }
}
