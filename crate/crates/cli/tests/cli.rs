//! End-to-end runs of the `ncps` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn ncps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, doc: &Value) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, serde_json::to_string(doc).unwrap()).unwrap();
    p
}

fn read(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

fn uni(n: usize, constant: &str, terms: &[(usize, &str)]) -> Value {
    let terms: Vec<Value> = terms
        .iter()
        .map(|(k, c)| json!({"word": vec![1; *k], "coeff": c}))
        .collect();
    json!({"alphabet": 1, "truncation": n, "ring": "rational", "constant": constant, "terms": terms})
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn free_c2m_gives_catalan_moments() {
    let dir = TempDir::new().unwrap();
    let k = write(&dir, "k.json", &uni(6, "0", &[(2, "1")]));
    let out = dir.path().join("m.json");
    let r = ncps(&[
        "convert",
        "--kind",
        "free",
        "--direction",
        "c2m",
        "-i",
        s(&k),
        "-o",
        s(&out),
    ]);
    assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    assert!(r.stdout.is_empty());
    assert_eq!(read(&out), uni(6, "1", &[(2, "1"), (4, "2"), (6, "5")]));
}

#[test]
fn monotone_c2m_second_moment() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", &uni(2, "0", &[(1, "1"), (2, "1")]));
    let out = dir.path().join("m.json");
    assert!(ncps(&[
        "convert",
        "--kind",
        "monotone",
        "--direction",
        "c2m",
        "-i",
        s(&h),
        "-o",
        s(&out)
    ])
    .status
    .success());
    assert_eq!(read(&out), uni(2, "1", &[(1, "1"), (2, "2")]));
}

#[test]
fn boolean_m2c_of_unit_is_empty() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.json", &uni(3, "1", &[]));
    let r = ncps(&["convert", "--kind", "boolean", "--direction", "m2c", "-i", s(&m)]);
    assert!(r.status.success());
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v, uni(3, "0", &[]));
}

#[test]
fn class_mismatch_exits_2() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.json", &uni(3, "0", &[(1, "1")]));
    let r = ncps(&["convert", "--kind", "free", "--direction", "m2c", "-i", s(&m)]);
    assert_eq!(r.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&r.stderr).lines().count(), 1);
}

#[test]
fn ops() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.json", &uni(3, "1", &[(1, "1")]));
    let one = write(&dir, "one.json", &uni(3, "1", &[]));
    let x = write(&dir, "x.json", &uni(3, "0", &[(1, "1")]));
    let out = dir.path().join("out.json");

    assert!(ncps(&["op", "sinv", s(&f), "-o", s(&out)]).status.success());
    assert_eq!(read(&out), uni(3, "1", &[(1, "-1"), (2, "2"), (3, "-5")]));

    assert!(ncps(&["op", "compose", s(&one), s(&f), "-o", s(&out)]).status.success());
    assert_eq!(read(&out), read(&f));

    assert!(ncps(&["op", "prelie", s(&x), s(&x), "-o", s(&out)]).status.success());
    assert_eq!(read(&out), uni(3, "0", &[(2, "2")]));

    assert!(ncps(&["op", "compose", s(&f), s(&f), "-o", s(&out)]).status.success());
    assert_eq!(read(&out), uni(3, "1", &[(1, "2"), (2, "2"), (3, "1")]));
}

#[test]
fn flow_emits_polynomials_in_t() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", &uni(2, "0", &[(1, "2"), (2, "3")]));
    let r = ncps(&["op", "flow", s(&h)]);
    assert!(r.status.success());
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v["ring"], "rational_poly_t");
    assert_eq!(v["constant"], json!([["1", 0]]));
    assert_eq!(v["terms"][1]["coeff"], json!([["3", 1], ["4", 2]]));
    let r = ncps(&["op", "flow", s(&h), "--t-param", "1"]);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v, uni(2, "1", &[(1, "2"), (2, "7")]));
}

#[test]
fn output_round_trips_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "f.json",
        &json!({"alphabet": 2, "truncation": 3, "ring": "rational", "constant": "1",
                "terms": [{"word": [1], "coeff": "1/2"}, {"word": [2, 1], "coeff": "-3"}]}),
    );
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert!(ncps(&["op", "log", s(&f), "-o", s(&a)]).status.success());
    assert!(ncps(&["op", "exp", s(&a), "-o", s(&b)]).status.success());
    assert_eq!(read(&b), read(&f));
    let c = dir.path().join("c.json");
    assert!(ncps(&["op", "exp", s(&a), "-o", s(&c)]).status.success());
    assert_eq!(fs::read(&b).unwrap(), fs::read(&c).unwrap());
    assert!(fs::read_to_string(&b).unwrap().ends_with("}\n"));
}

#[test]
fn oracles() {
    let dir = TempDir::new().unwrap();
    let ones = write(&dir, "k.json", &uni(4, "0", &[(1, "1"), (2, "1"), (3, "1"), (4, "1")]));
    let r = ncps(&["oracle", "nc-free", "-i", s(&ones), "--word", "1,1,1,1"]);
    assert_eq!(String::from_utf8_lossy(&r.stdout), "14\n");

    let r = ncps(&["oracle", "monotone-formula", "-n", "3"]);
    assert_eq!(String::from_utf8_lossy(&r.stdout), "h3*t + 5/2*h1*h2*t^2 + h1^3*t^3\n");

    let zero = write(&dir, "z.json", &uni(3, "0", &[]));
    let r = ncps(&["oracle", "monotone-trees", "-i", s(&zero)]);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v, uni(3, "1", &[]));

    let b = write(&dir, "b.json", &uni(3, "0", &[(1, "1")]));
    let r = ncps(&["oracle", "boolean-recursion", "-i", s(&b)]);
    let v: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(v, uni(3, "1", &[(1, "1"), (2, "1"), (3, "1")]));

    let long = write(&dir, "l.json", &uni(11, "0", &[(1, "1")]));
    assert_eq!(ncps(&["oracle", "nc-free", "-i", s(&long)]).status.code(), Some(2));
    assert_eq!(
        ncps(&["oracle", "monotone-trees", "-i", s(&long)]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_exit_codes() {
    let r = ncps(&[
        "verify",
        "--alphabet",
        "2",
        "--degree",
        "3",
        "--trials",
        "3",
        "--seed",
        "42",
    ]);
    assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stdout));
    let again = ncps(&[
        "verify",
        "--alphabet",
        "2",
        "--degree",
        "3",
        "--trials",
        "3",
        "--seed",
        "42",
    ]);
    assert_eq!(r.stdout, again.stdout);

    let args = [
        "verify",
        "--alphabet",
        "2",
        "--degree",
        "3",
        "--trials",
        "3",
        "--seed",
        "42",
        "--inject-fault",
        "drop-insertion-gap",
    ];
    let bad = ncps(&args);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("FAIL"));

    assert_eq!(
        ncps(&["verify", "--alphabet", "0", "--degree", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ncps(&["verify", "--alphabet", "x", "--degree", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn malformed_input_exits_2_without_panicking() {
    let dir = TempDir::new().unwrap();
    let bad = [
        "not json",
        r#"{"alphabet":1,"truncation":2,"ring":"rational","constant":"2/4","terms":[]}"#,
        r#"{"alphabet":1,"truncation":2,"ring":"rational","constant":"1","terms":[{"word":[1,1],"coeff":"1"},{"word":[1],"coeff":"1"}]}"#,
        r#"{"alphabet":1,"truncation":2,"ring":"rational","constant":"1","terms":[{"word":[0],"coeff":"1"}]}"#,
    ];
    for (i, text) in bad.iter().enumerate() {
        let p = dir.path().join(format!("bad{i}.json"));
        fs::write(&p, text).unwrap();
        let r = ncps(&["op", "sinv", s(&p)]);
        assert_eq!(r.status.code(), Some(2), "{text}");
        let err = String::from_utf8_lossy(&r.stderr);
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(!err.contains("panicked"));
    }
    assert_eq!(ncps(&["op", "sinv", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(ncps(&["bogus"]).status.code(), Some(2));
}
