use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-scaffold"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn freeness_range() {
    let out = run(&[
        "freeness", "--p", "2", "--n", "2", "--r", "1", "--b", "1", "--f-val", "4", "--h", "-2..1",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let free: Vec<bool> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["free"].as_bool().unwrap())
        .collect();
    assert_eq!(free, vec![false, true, true, true]);
    let first = &v[0];
    assert_eq!(first["witness_j"], 1);
    assert_eq!(first["d"], serde_json::json!([0, 1, 1, 1]));
    for key in [
        "p",
        "n",
        "r",
        "b",
        "f_val",
        "h_raw",
        "h_norm",
        "m",
        "w",
        "generator_count",
        "basis",
    ] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn freeness_validation_and_periodicity() {
    let out = run(&["freeness", "--b", "0", "--h", "0"]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
    assert_eq!(code(&run(&["freeness", "--h", "x..y"])), 2);
    assert_eq!(code(&run(&["freeness", "--p", "4", "--h", "0"])), 2);

    let a = json(&run(&["freeness", "--h", "0"]));
    let b = json(&run(&["freeness", "--h", "4"]));
    assert_eq!(a[0]["free"], true);
    for key in ["d", "w", "free", "generator_count", "basis", "h_norm"] {
        assert_eq!(a[0][key], b[0][key]);
    }
    assert_eq!(b[0]["m"], 1);
}

#[test]
fn scaffold_verify_exit_codes() {
    let out = run(&[
        "scaffold-verify",
        "--p",
        "2",
        "--n",
        "2",
        "--r",
        "1",
        "--b",
        "1",
        "--f-val",
        "4",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["tolerance"], 13);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 8);

    let out = run(&[
        "scaffold-verify",
        "--p",
        "3",
        "--n",
        "2",
        "--r",
        "1",
        "--b",
        "1",
        "--f-val",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["tolerance"], 19);

    assert_eq!(code(&run(&["scaffold-verify", "--f-val", "0"])), 3);
    assert_eq!(code(&run(&["scaffold-verify", "--f-val", "1"])), 3);
}

#[test]
fn json_is_deterministic() {
    let args = [
        "scaffold-verify",
        "--p",
        "3",
        "--n",
        "2",
        "--b",
        "2",
        "--jobs",
        "3",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let all = text.find("\"all_passed\"").unwrap();
    let checks = text.find("\"checks\"").unwrap();
    assert!(all < checks);
}

#[test]
fn act_examples() {
    let out = run(&["act", "--f-val", "4", "--z", "z_1", "--y", "x^3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"], "x^2");
    assert_eq!(v["valuation"], -2);

    let v = json(&run(&["act", "--z", "z_0", "--y", "(T^-1 + 1)*x^2 + x"]));
    assert_eq!(v["result"], "x + (T^-1 + 1)*x^2");

    let v = json(&run(&["act", "--z", "z_2", "--y", "1"]));
    assert_eq!(v["result"], "0");
    assert_eq!(v["valuation"], "+inf");

    assert_eq!(code(&run(&["act", "--z", "w_1", "--y", "1"])), 2);
    assert_eq!(code(&run(&["act", "--z", "z_1", "--y", "x^"])), 2);
}

#[test]
fn assoc_order_listing() {
    let out = run(&["assoc-order", "--f-val", "4", "--h", "0"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let shifts: Vec<i64> = v["basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["shift"].as_i64().unwrap())
        .collect();
    assert_eq!(shifts, vec![0, 0, 0, -1]);
    assert_eq!(v["trusted"], true);

    let shifted = json(&run(&["assoc-order", "--f-val", "4", "--h", "4"]));
    assert_eq!(v["basis"], shifted["basis"]);

    assert_eq!(code(&run(&["assoc-order", "--f-val", "2", "--h", "0"])), 3);
    let forced = run(&["assoc-order", "--f-val", "2", "--h", "0", "--force"]);
    assert_eq!(code(&forced), 0);
    assert_eq!(json(&forced)["trusted"], false);
}

#[test]
fn certificate_and_atlas() {
    let out = run(&["certificate", "--p", "3", "--n", "2", "--b", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["valuations_match"], true);
    assert_eq!(code(&run(&["certificate", "--rho", "x"])), 2);

    let out = run(&["atlas", "--p", "3", "--n", "2", "--output", "tsv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(
        rows.iter()
            .filter(|l| l.split('\t').nth(1) == Some("true"))
            .count(),
        5
    );
}

#[test]
fn alternative_f_and_beta() {
    let out = run(&["scaffold-verify", "--f", "T^4 + T^7", "--beta", "T^-1 + T"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["params"]["beta"], "T^-1 + T");
    assert_eq!(code(&run(&["scaffold-verify", "--beta", "T^-2"])), 2);
}
