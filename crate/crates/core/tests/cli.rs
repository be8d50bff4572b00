use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn vvkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vvkit"))
        .args(args)
        .env("VVKIT_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn write_tmp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vvkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn points(name: &str, pts: &[[&str; 3]]) -> PathBuf {
    let v = serde_json::json!({"dim": 2, "points": pts});
    write_tmp(name, &v.to_string())
}

const FIVE: [[&str; 3]; 5] = [
    ["1", "0", "0"],
    ["0", "1", "0"],
    ["0", "0", "1"],
    ["1", "1", "1"],
    ["2", "3", "1"],
];

#[test]
fn vv_check_five_general_points() {
    let f = points("five.json", &FIVE);
    let o = vvkit(&["vv-check", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "torsion-free");

    let collinear = points(
        "line.json",
        &[
            ["0", "1", "0"],
            ["1", "1", "0"],
            ["-1", "1", "0"],
            ["2", "1", "0"],
        ],
    );
    let o = vvkit(&["vv-check", collinear.to_str().unwrap(), "--tmax", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "not torsion-free");
}

#[test]
fn vv_check_accepts_an_ideal_file() {
    let f = points("five-b.json", &FIVE);
    let ideal = vvkit(&["points-ideal", f.to_str().unwrap()]);
    assert_eq!(ideal.status.code(), Some(0));
    let g = write_tmp(
        "five-ideal.json",
        std::str::from_utf8(&ideal.stdout).unwrap(),
    );
    let o = vvkit(&["vv-check", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["tmax"], 5);
    let h = vvkit(&["hilbert", g.to_str().unwrap()]);
    assert_eq!(json(&h)["series"], "(1 + 2t + 2t^2)/(1-t)");
}

#[test]
fn classify_m8_columns() {
    let f = points(
        "m8.json",
        &[
            ["1", "0", "0"],
            ["0", "1", "0"],
            ["1", "1", "0"],
            ["1", "1", "1"],
            ["2", "0", "1"],
            ["3", "0", "1"],
        ],
    );
    let o = vvkit(&["classify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["label"], 8);
}

#[test]
fn gb_orders() {
    let f = write_tmp(
        "tw.json",
        r#"{"ring": {"vars": ["x", "y", "z"]}, "gens": ["x^2 - y", "x*y - z"]}"#,
    );
    let o = vvkit(&["gb", f.to_str().unwrap(), "--order", "degrevlex"]);
    assert_eq!(
        json(&o)["basis"],
        serde_json::json!(["y^2 - x*z", "x*y - z", "x^2 - y"])
    );
    let o = vvkit(&["gb", f.to_str().unwrap(), "--order", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn repro_claims() {
    let o = vvkit(&["repro", "P43"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["claim"], "P43");
    assert_eq!(r["status"], "pass");

    let o = vvkit(&["repro", "NOPE"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());

    let list = json(&vvkit(&["repro", "list"]));
    let ids: Vec<&str> = list
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    for id in [
        "R15b",
        "T22-claim",
        "T23",
        "T24",
        "P41",
        "P42",
        "P43",
        "P44",
        "ATFN",
        "CONJ-d6",
    ] {
        assert!(ids.contains(&id), "{id} missing");
    }
}

#[test]
fn mpower_exit_codes() {
    let f = points(
        "six.json",
        &[
            ["1", "0", "0"],
            ["0", "1", "0"],
            ["0", "0", "1"],
            ["1", "1", "1"],
            ["2", "3", "1"],
            ["5", "7", "1"],
        ],
    );
    let yes = vvkit(&["mpower", f.to_str().unwrap(), "--e", "4"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(json(&yes)["contained"], true);
    let no = vvkit(&["mpower", f.to_str().unwrap(), "--e", "1"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(json(&no)["contained"], false);
}

#[test]
fn relation_type_bound() {
    let f = points("five-c.json", &FIVE);
    let o = vvkit(&["relation-type", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["relation_type"], 2);
    let o = vvkit(&["relation-type", f.to_str().unwrap(), "--bound", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["exceeded"], true);
}

#[test]
fn bad_input_is_a_usage_error() {
    let f = write_tmp("bad.json", "{\"dim\": 2, \"points\": [[\"1\", \"0\"]]}");
    let o = vvkit(&["vv-check", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(
        vvkit(&["hilbert", "/nonexistent/file.json"]).status.code(),
        Some(2)
    );
    assert_eq!(vvkit(&["sample", "--class", "9-99"]).status.code(), Some(2));
    assert_eq!(vvkit(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = vvkit(&["sample", "--class", "6-9", "--seed", "4"]);
    let b = vvkit(&["sample", "--class", "6-9", "--seed", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let f = write_tmp("six-9.json", std::str::from_utf8(&a.stdout).unwrap());
    let c = vvkit(&["vv-check", f.to_str().unwrap()]);
    let d = vvkit(&["vv-check", f.to_str().unwrap()]);
    assert_eq!(c.stdout, d.stdout);
    assert_eq!(json(&vvkit(&["classify", f.to_str().unwrap()]))["label"], 9);
}
