use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satake")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    let out = run(&a);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

/// Same flattening as the text format: `path = value` per leaf.
fn flatten(v: &Value, path: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                flatten(x, &p, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(x, &format!("{path}[{i}]"), out);
            }
        }
        _ => out.push(format!("{path} = {v}")),
    }
}

fn labels(v: &Value) -> Vec<String> {
    v["decorations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["label"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn enumerate_examples() {
    let a1 = json(&["enumerate", "--type", "A1"]);
    assert_eq!(a1["count"], 2);
    assert!(labels(&a1).iter().all(|l| l == "Sat"));

    let g2 = labels(&json(&["enumerate", "--type", "G2"]));
    assert_eq!(g2.iter().filter(|l| *l == "WeakSat" || *l == "NonweakGSat").count(), 2);

    let a3 = labels(&json(&["enumerate", "--type", "A3"]));
    assert!(a3.iter().all(|l| l == "Sat" || l == "NotGSat"));
}

#[test]
fn table1_examples() {
    let a = json(&["table1", "--type", "An", "--max-rank", "8"]);
    assert_eq!(a.as_array().unwrap().len(), 8);
    assert!(a.as_array().unwrap().iter().all(|t| t["entries"].as_array().unwrap().is_empty()));

    let f4 = json(&["table1", "--type", "F4"]);
    let e = f4[0]["entries"].as_array().unwrap();
    assert_eq!(e.len(), 2);
    let mut xs: Vec<(Value, Value)> = e.iter().map(|x| (x["X"].clone(), x["node"].clone())).collect();
    xs.sort_by_key(|p| p.1.as_u64());
    assert_eq!(xs[0], (serde_json::json!([2, 3, 4]), serde_json::json!(1)));
    assert_eq!(xs[1], (serde_json::json!([2, 3]), serde_json::json!(4)));

    // B_n: one entry per even i <= n
    let b = json(&["table1", "--type", "Bn", "--max-rank", "6"]);
    for t in b.as_array().unwrap() {
        let n: usize = t["type"].as_str().unwrap()[1..].parse().unwrap();
        let mut nodes: Vec<u64> = t["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["node"].as_u64().unwrap())
            .collect();
        nodes.sort();
        let want: Vec<u64> = (2..=n as u64).filter(|i| i % 2 == 0).collect();
        assert_eq!(nodes, want, "B{n}");
        assert_eq!(t["unmatched"], 0);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["enumerate", "--type", "E9"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--type", "Q2"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--type", "A3", "--X", "1,2", "--tau", "id"]).status.code(), Some(2));
    assert_eq!(run(&["build-k", "--type", "C2", "--X", "2", "--gamma", "0"]).status.code(), Some(2));
    assert_eq!(run(&["build-k", "--type", "C2", "--X", "2", "--gamma", "1,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--type", "E6", "--max-rank", "4"]).status.code(), Some(2));
    assert_eq!(run(&["heck", "--type", "E7"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["--format", "xml", "enumerate", "--type", "A1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--type", "A2", "--X", "2", "--tau", "id"]).status.code(), Some(0));
}

#[test]
fn zero_gamma_behind_flag() {
    let v = json(&["build-k", "--type", "C2", "--X", "2", "--gamma", "0", "--allow-zero-gamma"]);
    assert_eq!(v["dim_k"], 6);
    let v = json(&["build-k", "--type", "C2", "--X", "2", "--gamma", "-2/3"]);
    assert_eq!(v["gamma"], serde_json::json!(["-2/3"]));
    assert_eq!(v["standard_basis"]["b_words"][3], serde_json::json!([1, 1, 2]));
}

#[test]
fn negative_control() {
    let v = json(&["verify", "--type", "A2", "--X", "2", "--tau", "id"]);
    assert_eq!(v["passed"], true);
    let d = &v["decorations"][0];
    assert_eq!(d["label"], "NotGSat");
    for run in d["theorem"].as_array().unwrap() {
        let r = &run["report"];
        for c in ["cond_i", "cond_ii", "cond_iii", "cond_iv"] {
            assert_eq!(r[c], false);
        }
        assert!(r["witness"].is_object());
    }
    let c = json(&["classify", "--type", "A2", "--X", "2", "--tau", "id"]);
    assert_eq!(c["violation"]["node"], 1);
    assert_eq!(c["violation"]["partner"], 2);
}

#[test]
fn verify_examples() {
    let c2 = json(&["verify", "--type", "C2"]);
    assert_eq!(c2["passed"], true);
    let names: Vec<&str> = c2["examples"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.contains("centre")));
    assert!(c2["examples"].as_array().unwrap().iter().all(|c| c["passed"] == true));

    let g2 = json(&["verify", "--type", "G2"]);
    assert_eq!(g2["passed"], true);
    assert!(g2["examples"].as_array().unwrap().iter().any(|c| c["name"].as_str().unwrap().contains("18")));
}

#[test]
fn deterministic_output() {
    let args = ["--format", "json", "--seed", "5", "verify", "--type", "B3"];
    let a = run(&args);
    let b = run(&args);
    let mut one = vec!["--jobs", "1"];
    one.extend_from_slice(&args);
    let c = run(&one);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn text_and_json_agree() {
    for args in [
        vec!["enumerate", "--type", "B2"],
        vec!["classify", "--type", "C2", "--X", "2"],
        vec!["build-k", "--type", "G2", "--X", "1", "--gamma", "3"],
        vec!["center", "--type", "C2", "--X", "2"],
        vec!["heck", "--type", "A2"],
        vec!["table1", "--type", "G2"],
    ] {
        let v = json(&args);
        let mut want = Vec::new();
        flatten(&v, "", &mut want);
        let out = run(&args);
        let got: Vec<String> = String::from_utf8(out.stdout).unwrap().lines().map(String::from).collect();
        assert_eq!(got, want, "{args:?}");
    }
}

#[test]
fn center_of_weak_example() {
    let v = json(&["center", "--type", "C2", "--X", "2"]);
    assert_eq!(v["label"], "WeakSat");
    assert_eq!(v["center"]["dim_center"], 1);
    assert_eq!(v["reductivity"]["is_reductive"], false);
}
