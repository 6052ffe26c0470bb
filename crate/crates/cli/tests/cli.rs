use serde_json::Value;
use std::collections::BTreeMap;
use std::process::Command;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_biregular")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out, err) = bin(&all);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

/// Flattens a JSON value the way a reader of the text output would: leaf
/// paths mapped to display strings.
fn leaves(v: &Value, path: &str, out: &mut BTreeMap<String, String>) {
    let key = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => m.iter().for_each(|(k, x)| leaves(x, &key(k), out)),
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            a.iter().enumerate().for_each(|(i, x)| leaves(x, &format!("{path}[{i}]"), out))
        }
        Value::Array(a) => {
            let s: Vec<String> = a.iter().map(show).collect();
            out.insert(path.to_string(), format!("[{}]", s.join(", ")));
        }
        Value::Object(_) => {
            out.insert(path.to_string(), "{}".into());
        }
        x => {
            out.insert(path.to_string(), show(x));
        }
    }
}

fn show(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        x => x.to_string(),
    }
}

const COMMANDS: &[&[&str]] = &[
    &["info", "--graph6", "C~"],
    &["charpoly", "--family", "path:4", "--matrix", "Q"],
    &["charpoly", "--family", "star:3", "--matrix", "NL"],
    &["verify-biregular", "--family", "cube:4,2"],
    &["transport", "--family", "complete_bipartite:2,3"],
    &["trees", "--family", "subspace:3,1,2", "--method", "subspace"],
    &["relate", "--family", "path:4", "--x", "A", "--y", "Q"],
    &["relate", "--family", "star:3", "--x", "NL", "--y", "A", "--rmax", "2"],
    &["identity", "--family", "path:4", "--f", "0,-2,0,1", "--g", "-1,6,-5,1"],
    &["jpoly", "--family", "petersen"],
    &["scan", "--nmax", "4", "--check", "con_square,lemma_conditions"],
];

#[test]
fn json_round_trips_byte_for_byte() {
    for args in COMMANDS {
        let mut all = args.to_vec();
        all.extend(["--format", "json"]);
        let (code, out, _) = bin(&all);
        assert_eq!(code, 0, "{args:?}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", out);
        assert_eq!(v["exact"], Value::Bool(true));
    }
}

#[test]
fn text_and_json_carry_the_same_data() {
    for args in COMMANDS {
        if args[0] == "scan" {
            continue; // elapsed time differs between runs
        }
        let (_, v) = json(args);
        let mut expected = BTreeMap::new();
        leaves(&v, "", &mut expected);
        let (_, text, _) = bin(args);
        let got: BTreeMap<String, String> = text
            .lines()
            .map(|l| {
                let (k, v) = l.split_once(" = ").unwrap();
                (k.to_string(), v.to_string())
            })
            .collect();
        assert_eq!(got, expected, "{args:?}");
    }
}

#[test]
fn p4_relation_example() {
    let (code, v) = json(&["relate", "--family", "path:4", "--x", "A", "--y", "Q"]);
    assert_eq!(code, 0);
    let rel = &v["payload"]["relations"][0];
    assert_eq!(rel["f"], serde_json::json!(["0", "-2", "0", "1"]));
    assert_eq!(rel["g"], serde_json::json!(["-1", "6", "-5", "1"]));
}

#[test]
fn tree_and_info_examples() {
    let (_, cube) = json(&["trees", "--family", "cube:4,2", "--method", "cube"]);
    let (_, mt) = json(&["trees", "--family", "cube:4,2", "--method", "matrixtree"]);
    assert_eq!(cube["payload"]["count"], "128");
    assert_eq!(mt["payload"]["count"], "128");
    let (_, info) = json(&["info", "--graph6", "C~"]);
    assert_eq!(info["payload"]["n"], 4);
    assert_eq!(info["payload"]["classification"], "Regular(3)");
    assert_eq!(info["payload"]["connected"], true);
}

#[test]
fn radicals_serialize_as_maps() {
    let (_, v) = json(&["relate", "--family", "star:3", "--x", "NL", "--y", "A", "--power", "1"]);
    let coeffs = &v["payload"]["relation"]["coeffs"];
    assert_eq!(coeffs[0], serde_json::json!({ "1": "1" }));
    assert_eq!(coeffs[1], serde_json::json!({ "3": "-1/3" }));
}

#[test]
fn edge_list_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::write(&path, "# path\n0-1 1-2\n2-3\n").unwrap();
    let (code, v) = json(&["info", "--edges", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["edge_count"], 3);
    assert_eq!(v["payload"]["kind"], "neither");
}

#[test]
fn exit_codes() {
    // Property failures exit 2.
    assert_eq!(bin(&["identity", "--family", "path:4", "--f", "x^3", "--g", "x"]).0, 2);
    assert_eq!(bin(&["verify-biregular", "--family", "star:3"]).0, 0);
    // Usage and input errors exit 1 and print only to stderr.
    for args in [
        &["frobnicate"][..],
        &["info"],
        &["info", "--graph6", "C~", "--family", "path:3"],
        &["info", "--graph6", "!!"],
        &["charpoly", "--family", "path:3", "--matrix", "Z"],
        &["verify-biregular", "--family", "path:4"],
        &["jpoly", "--family", "path:3"],
        &["scan", "--nmax", "9", "--check", "con_square"],
        &["trees", "--family", "path:4", "--method", "cube"],
    ] {
        let (code, out, err) = bin(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
    assert_eq!(bin(&["--help"]).0, 0);
}

#[test]
fn scan_checkpoint_pass_through() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.ckpt");
    let args = ["scan", "--nmax", "5", "--check", "theorem_table", "--checkpoint", path.to_str().unwrap()];
    let (code, first) = json(&args);
    assert_eq!(code, 0);
    assert!(path.exists());
    let (_, again) = json(&args);
    assert_eq!(first["payload"]["counters"], again["payload"]["counters"]);
    assert_eq!(first["payload"]["counters"]["examined"], 30);
}
