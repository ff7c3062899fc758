use std::process::Command;

use serde_json::{json, Value};

use sectionkit::cli::{run, Outcome};
use sectionkit::fixture::{load, scheme_to_json, set_to_json, time_to_json};

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn cli(args: &[&str]) -> Outcome {
    let argv = std::iter::once("sectionkit").chain(args.iter().copied());
    run(argv, &mut std::io::empty())
}

fn report(args: &[&str]) -> Value {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn theta_prints_the_pairing() {
    assert_eq!(cli(&["theta", "1", "2"]).stdout, "3\n");
    assert_eq!(cli(&["theta", "3", "1"]).stdout, "5\n");
    assert_eq!(cli(&["theta", "0", "2"]).code, 2);
}

#[test]
fn predictable_section_report() {
    let b = fixture("fix_b.json");
    let r = report(&["section", "--kind", "predictable", "--set", "P", "--epsilon", "0/1", &b]);
    assert_eq!(r["deficit"], json!("0/1"));
    assert_eq!(r["time"], json!({"w1": 2, "w2": 2, "w3": "inf", "w4": "inf"}));
    assert_eq!(r["trace"]["m_star"], json!([]));

    let r = report(&["section", "--kind", "predictable", "--set", "P", "--epsilon", "1/8", "--strategy", "souslin", &b]);
    assert_eq!(r["strategy"], json!("souslin"));
    assert_eq!(r["trace"]["m_star"], json!([1, 1]));
}

#[test]
fn optional_section_report_has_the_split() {
    let r = report(&["section", "--kind", "optional", "--set", "O", "--epsilon", "1/4", &fixture("fix_b.json")]);
    let split = &r["trace"]["split"];
    assert_eq!(split["predictable_budget"], json!("1/8"));
    assert_eq!(split["thin_budget"], json!("1/8"));
    assert_eq!(r["deficit"], json!("0/1"));
}

#[test]
fn refinement_failure_names_the_time_index() {
    let out = cli(&["validate", &fixture("bad_refinement.json")]);
    assert_eq!(out.code, 3);
    let r: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r["valid"], json!(false));
    assert_eq!(r["violations"][0]["path"], json!("filtration[1]"));
    assert!(r["violations"][0]["message"].as_str().unwrap().contains("time index 1"));
}

#[test]
fn validate_summarizes_objects() {
    let r = report(&["validate", &fixture("fix_b.json")]);
    assert_eq!(r["valid"], json!(true));
    assert_eq!(r["summary"]["sets"]["P"], json!({"predictable": true, "optional": true}));
    assert_eq!(r["summary"]["sets"]["Q"], json!({"predictable": false, "optional": false}));
    assert_eq!(r["summary"]["times_checked"]["tau"]["stopping"], json!(true));
    assert_eq!(r["summary"]["probes"], json!(96));
}

#[test]
fn seed_is_reported_and_output_is_stable() {
    let b = fixture("fix_b.json");
    let one = cli(&["--seed", "9", "validate", &b]);
    let two = cli(&["--seed", "9", "validate", &b]);
    assert_eq!(one, two);
    let r: Value = serde_json::from_str(&one.stdout).unwrap();
    assert_eq!(r["seed"], json!(9));
}

#[test]
fn documents_can_come_from_stdin() {
    let text = std::fs::read_to_string(fixture("fix_a.json")).unwrap();
    let out = run(["sectionkit", "classify-time", "--time", "tau"], &mut text.as_bytes());
    assert_eq!(out.code, 0, "{}", out.stderr);
    let r: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r["inaccessible_mass"], json!("0/1"));
    assert_eq!(r["accessible_cover"], json!([{"w1": 1, "w2": 1}]));
}

#[test]
fn pretty_output_parses_to_the_same_report() {
    let b = fixture("fix_b.json");
    let plain = report(&["souslin", "union", &b, "--scheme", "A", "B"]);
    let pretty = report(&["--format", "pretty", "souslin", "union", &b, "--scheme", "A", "B"]);
    assert_eq!(plain, pretty);
}

#[test]
fn souslin_reports() {
    let b = fixture("fix_b.json");
    let r = report(&["souslin", "eval", &b, "--scheme", "A", "B"]);
    assert_eq!(r["results"][0]["eval"], json!(["a", "b", "c"]));
    assert_eq!(r["results"][1]["eval"], json!(["b", "c"]));
    assert_eq!(report(&["souslin", "intersect", &b, "--scheme", "A", "B"])["eval"], json!(["b", "c"]));
    let m = report(&["souslin", "monotonize", &b, "--scheme", "A"]);
    assert_eq!((m["vertical"].clone(), m["horizontal"].clone()), (json!(true), json!(true)));
    assert_eq!(cli(&["souslin", "monotonize", &b, "--scheme", "A", "B"]).code, 2);
}

#[test]
fn merged_scheme_reloads_with_the_same_eval() {
    let b = fixture("fix_b.json");
    let r = report(&["souslin", "union", &b, "--scheme", "A", "B"]);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&b).unwrap()).unwrap();
    doc["schemes"] = json!({"U": r["scheme"]});
    let loaded = load(&doc.to_string()).unwrap();
    let u = &loaded.schemes["U"];
    assert_eq!(u.paving().format_set(&u.eval()), vec!["a", "b", "c"]);
    assert_eq!(scheme_to_json(u), r["scheme"]);
}

#[test]
fn sets_and_times_round_trip() {
    let text = std::fs::read_to_string(fixture("fix_b.json")).unwrap();
    let doc = load(&text).unwrap();
    let raw: Value = serde_json::from_str(&text).unwrap();
    let space = doc.space.space();
    for (name, set) in &doc.sets {
        let mut want: Vec<Value> = raw["sets"][name].as_array().unwrap().clone();
        want.sort_by_key(|v| (v[0].as_str().unwrap().to_string(), v[1].as_u64().unwrap()));
        let mut got = set_to_json(space, set).as_array().unwrap().clone();
        got.sort_by_key(|v| (v[0].as_str().unwrap().to_string(), v[1].as_u64().unwrap()));
        assert_eq!(got, want, "set {name}");
    }
    for (name, time) in &doc.times {
        assert_eq!(time_to_json(space, time), raw["times"][name], "time {name}");
    }
}

#[test]
fn exit_codes() {
    let a = fixture("fix_a.json");
    let b = fixture("fix_b.json");
    assert_eq!(cli(&["validate", &fixture("malformed.json")]).code, 2);
    assert_eq!(cli(&["validate", &fixture("does_not_exist.json")]).code, 2);
    assert_eq!(cli(&["section", "--kind", "optional", "--set", "O", "--epsilon", "x", &b]).code, 2);
    assert_eq!(cli(&["section", "--kind", "optional", "--set", "missing", "--epsilon", "0", &b]).code, 2);
    assert_eq!(cli(&["validate", &fixture("bad_probability.json")]).code, 3);
    assert_eq!(cli(&["section", "--kind", "predictable", "--set", "Q", "--epsilon", "0", &b]).code, 4);
    assert_eq!(cli(&["section", "--kind", "optional", "--set", "O", "--epsilon", "-1/2", &b]).code, 4);
    assert_eq!(cli(&["classify-time", "--time", "early", &a]).code, 4);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn binary_matches_in_process_run() {
    let b = fixture("fix_b.json");
    let args = ["section", "--kind", "optional", "--set", "O", "--epsilon", "1/8", "--strategy", "souslin", &b];
    let out = Command::new(env!("CARGO_BIN_EXE_sectionkit")).args(args).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), cli(&args).stdout);

    let out = Command::new(env!("CARGO_BIN_EXE_sectionkit"))
        .args(["validate", &fixture("bad_refinement.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
