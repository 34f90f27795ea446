use std::path::Path;
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

fn forge(dir: &Path, args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_reflexive-forge"))
        .args(args)
        .current_dir(dir)
        .env("REFLEXIVE_FORGE_CACHE", dir.join("cache"))
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

fn setup() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        ("c5.txt", "5\n1 2\n2 3\n3 4\n4 5\n5 1\n"),
        ("k3.txt", "3\n1 2\n2 3\n1 3\n"),
        ("k3.json", r#"{"d": 3, "edges": [[1, 2], [2, 3], [1, 3]]}"#),
        ("hollow.cx", "3\n1 2\n1 3\n2 3\n"),
        ("a1.txt", "2 2\n1 0\n0 1\n"),
        ("a2.txt", "2 3\n1 0 1\n0 1 1\n"),
        ("bad.txt", "2 3\n1 0\n"),
        (
            "counterexample.txt",
            "6 7\n1 0 1 1 0 0 0\n1 1 0 0 0 0 0\n0 1 1 0 0 0 0\n0 0 0 1 1 0 1\n0 0 0 0 1 1 0\n0 0 0 0 0 1 1\nsharp\n",
        ),
    ];
    for (name, text) in files {
        std::fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

#[test]
fn perfect_reports_the_odd_hole() {
    let dir = setup();
    let (code, out) = forge(dir.path(), &["perfect", "--graph", "c5.txt"]);
    assert_eq!(code, 1);
    let r = json(&out);
    assert_eq!(r["verdict"], Value::Bool(false));
    assert_eq!(r["certificates"]["odd_hole"], serde_json::json!([1, 2, 3, 4, 5]));
}

#[test]
fn merge_check_of_two_triangles() {
    let dir = setup();
    let (code, out) = forge(dir.path(), &["merge-check", "--g1", "k3.txt", "--g2", "k3.json"]);
    assert_eq!(code, 0);
    let c = &json(&out)["certificates"];
    assert_eq!(c["vertex_count"], 6);
    for key in ["fano", "gorenstein", "terminal", "smooth"] {
        assert_eq!(c[key], true, "{key}");
    }
}

#[test]
fn merge_check_of_a_non_flag_complex_carries_an_obstruction() {
    let dir = setup();
    let (code, out) = forge(dir.path(), &["merge-check", "--c1", "hollow.cx", "--c2", "hollow.cx"]);
    assert_eq!(code, 1);
    let c = &json(&out)["certificates"];
    assert_eq!(c["obstructions"]["delta"]["check"]["certified"], true);
    assert_eq!(c["obstructions"]["delta_prime"]["check"]["certified"], true);
}

#[test]
fn toric_gb_of_the_counterexample() {
    let dir = setup();
    let order = "z,x2,x1,x3,x4,x5,x6,x7";
    let (code, out) = forge(dir.path(), &["toric-gb", "--config", "counterexample.txt", "--order", order]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["verdict"], serde_json::json!(["x1*x3*x5*x7 - x2*x4^2*x6"]));
    assert_eq!(r["certificates"]["initial_ideal"], serde_json::json!(["x1*x3*x5*x7"]));
    assert_eq!(r["certificates"]["fiber_check"]["failure"], Value::Null);

    let other = "z,x1,x2,x3,x4,x5,x6,x7";
    let (code, out) = forge(dir.path(), &["initial", "--config", "counterexample.txt", "--order", other]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["certificates"]["initial_ideal"], serde_json::json!(["x2*x4^2*x6"]));

    let (code, _) = forge(dir.path(), &["compressed", "--config", "counterexample.txt"]);
    assert_eq!(code, 1);
}

#[test]
fn theorem1_and_harmony() {
    let dir = setup();
    let (code, out) = forge(dir.path(), &["theorem1", "--a", "a2.txt", "--b", "a1.txt"]);
    assert_eq!(code, 0);
    let c = &json(&out)["certificates"];
    assert_eq!(c["matches"], true);
    assert_eq!(c["triangulation"]["unimodular"], true);
    let (code, _) = forge(dir.path(), &["harmony", "--a", "a1.txt", "--b", "a2.txt"]);
    assert_eq!(code, 0);
}

#[test]
fn obstruction_and_stable_complex() {
    let dir = setup();
    let (code, out) = forge(dir.path(), &["obstruction", "--graph", "c5.txt"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["certificates"]["found"]["obstruction"]["kind"], "odd_hole");
    let (code, _) = forge(dir.path(), &["obstruction", "--graph", "k3.txt"]);
    assert_eq!(code, 1);
    let (code, out) = forge(dir.path(), &["stable-complex", "--graph", "c5.txt"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["certificates"]["face_count"], 11);
}

#[test]
fn census_counts_and_cache() {
    let dir = setup();
    let (code, first) = forge(dir.path(), &["census", "--d", "3"]);
    assert_eq!(code, 0);
    let r = json(&first);
    assert_eq!(r["certificates"]["perfect_graphs"], 4);
    assert_eq!(r["certificates"]["gorenstein_fano_and_terminal"], 10);
    assert_eq!(std::fs::read_dir(dir.path().join("cache")).unwrap().count(), 1);

    let (_, second) = forge(dir.path(), &["census", "--d", "3"]);
    let mut a = r;
    let mut b = json(&second);
    a["elapsed_ms"] = Value::Null;
    b["elapsed_ms"] = Value::Null;
    assert_eq!(a, b);

    let (code, out) = forge(dir.path(), &["census", "--d", "6", "--no-cache"]);
    assert_eq!(code, 0);
    let c = &json(&out)["certificates"];
    assert_eq!(c["perfect_graphs"], 148);
    assert_eq!(c["pairs"], 11026);
    assert_eq!(c["checked"], 0);
}

#[test]
fn text_output() {
    let dir = setup();
    let (code, out) = forge(dir.path(), &["census", "--d", "2", "--text"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("command   census\nverdict   true\n"));
}

#[test]
fn input_errors_exit_two() {
    let dir = setup();
    assert_eq!(forge(dir.path(), &["toric-gb", "--config", "bad.txt"]).0, 2);
    assert_eq!(forge(dir.path(), &["perfect", "--graph", "missing.txt"]).0, 2);
    assert_eq!(forge(dir.path(), &["census", "--d", "7"]).0, 2);
    assert_eq!(forge(dir.path(), &["toric-gb", "--config", "a1.txt", "--order", "x1,q"]).0, 2);
    assert_eq!(forge(dir.path(), &["nonsense"]).0, 2);
    assert_eq!(forge(dir.path(), &["--help"]).0, 0);
}
