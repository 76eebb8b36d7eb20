use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn detpolar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detpolar"))
        .args(args)
        .env_remove("DETPOLAR_SEED")
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_detpolar"))
        .args(args)
        .env_remove("DETPOLAR_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn entry(v: &serde_json::Value, name: &str) -> Option<i64> {
    v["entries"].as_array()?.iter().find(|e| e["name"] == name)?["value"].as_i64()
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let path = corpus("x_l2.toml");
    let p = path.to_str().unwrap();
    let a = detpolar(&["invariants", "--cite", p]);
    let b = detpolar(&["invariants", "--cite", p]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["schema"], 1);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["cite"].is_string()));
    let plain = json(&detpolar(&["invariants", p]));
    assert!(plain["entries"].as_array().unwrap().iter().all(|e| e.get("cite").is_none()));
}

#[test]
fn input_hash_is_echoed() {
    let path = corpus("ideals/cusp_section.toml");
    let text = std::fs::read(&path).unwrap();
    let v = json(&detpolar(&["groebner", path.to_str().unwrap()]));
    assert_eq!(v["input_sha256"], detpolar_cli::report::sha256_hex(&text));
}

#[test]
fn malformed_entry_is_a_syntax_error() {
    let job = "schema = 1\nvariables = [\"x\", \"y\"]\nmatrix = [[\"x+*y\"], [\"y\"]]\n";
    let o = with_stdin(&["invariants", "-"], job);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("matrix[1][1]") && err.contains("syntax error at byte 2"), "{err}");
}

#[test]
fn undeclared_variable_and_bad_toml() {
    let o = with_stdin(&["invariants", "-"], "schema = 1\nvariables = [\"x\"]\nmatrix = [[\"x\"], [\"q\"]]\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("undeclared variable `q`"));
    let o = with_stdin(&["invariants", "-"], "schema = 1\nvariables = [\"x\"\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn groebner_examples() {
    let v = json(&detpolar(&["groebner", corpus("ideals/cusp_section.toml").to_str().unwrap()]));
    assert_eq!(v["groebner"]["quotient_dim"], "2");
    let v = json(&detpolar(&["groebner", corpus("ideals/square_of_max.toml").to_str().unwrap()]));
    assert_eq!(v["groebner"]["quotient_dim"], "3");
    assert_eq!(v["groebner"]["staircase"].as_array().unwrap().len(), 3);
    assert_eq!(v["groebner"]["saturation"], serde_json::json!(["1"]));
    assert_eq!(v["groebner"]["colon"], serde_json::json!(["y", "x"]));
    let o = detpolar(&["groebner", corpus("ideals/diagonal.toml").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["groebner"]["quotient_dim"], "INFINITE");
    assert_eq!(v["groebner"]["krull_dim"], 1);
    assert!(v["groebner"].get("staircase").is_none());
}

#[test]
fn prime_field_flag() {
    let p = corpus("ideals/cusp_section.toml");
    let v = json(&detpolar(&["groebner", "--field", "Fp:101", p.to_str().unwrap()]));
    assert_eq!(v["field"], "Fp:101");
    assert_eq!(v["groebner"]["quotient_dim"], "2");
    let o = detpolar(&["groebner", "--field", "Fp:100", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn seed_sources() {
    let p = corpus("x_l2.toml");
    let p = p.to_str().unwrap();
    let v = json(&detpolar(&["invariants", p]));
    assert_eq!(v["seeds"], serde_json::json!([20240601, 977123457]));
    let o = Command::new(env!("CARGO_BIN_EXE_detpolar"))
        .args(["invariants", p])
        .env("DETPOLAR_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(json(&o)["seeds"], serde_json::json!([99, 977123457]));
    let o = Command::new(env!("CARGO_BIN_EXE_detpolar"))
        .args(["invariants", "--seed", "5", "--second-seed", "6", p])
        .env("DETPOLAR_SEED", "99")
        .output()
        .unwrap();
    let v = json(&o);
    assert_eq!(v["seeds"], serde_json::json!([5, 6]));
    assert_eq!(entry(&v, "nd_polar_mult"), Some(4));
    assert_eq!(detpolar(&["invariants", "--seed", "6", "--second-seed", "6", p]).status.code(), Some(1));
}

#[test]
fn step_cap_exit_code() {
    let o = detpolar(&["invariants", "--step-cap", "1", corpus("wahl_central.toml").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(json(&o)["status"], "CAP_EXCEEDED");
}

#[test]
fn function_modes() {
    let w8 = corpus("wahl_w8.toml");
    let o = detpolar(&["family", "--mode", "af", w8.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let job = std::fs::read_to_string(&w8).unwrap().replace("[family]", "germ = \"x5\"\n\n[family]");
    let o = with_stdin(&["family", "--mode", "wf", "-"], &job);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert_eq!(v["verdicts"][0]["condition"], "W_F");
    assert_eq!(v["verdicts"][0]["outcome"], "UNDETERMINED");
    assert!(v["verdicts"][0]["gap"].is_string());
    assert_eq!(detpolar(&["family", "--mode", "bogus", w8.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn family_exit_codes() {
    let o = detpolar(&["family", corpus("wahl_w8.toml").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdicts"][0]["outcome"], "EQUISINGULAR");
    assert_eq!(entry(&v, "t0.invariant"), Some(78));
    let o = detpolar(&["family", corpus("x_l2.toml").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[family]"));
}

#[test]
fn trivial_family_is_equisingular() {
    let job = r#"
schema = 1
field = "Fp"
variables = ["x", "y", "z"]
parameters = ["t"]
matrix = [["z", "x"], ["y", "z"], ["x^2", "y"]]

[family]
parameter = "t"
"#;
    let o = with_stdin(&["family", "-"], job);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdicts"][0]["outcome"], "EQUISINGULAR");
    assert_eq!(v["verdicts"][1]["outcome"], "NO_SPLIT");
}
