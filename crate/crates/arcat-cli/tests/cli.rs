//! End-to-end runs of the binary: output anchors, exit codes,
//! structured error records, and byte-for-byte determinism.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arcat"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn scratch(name: &str, content: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    fs::create_dir_all(&dir).expect("tmpdir");
    let path = dir.join(name);
    fs::write(&path, content).expect("write scratch file");
    path
}

fn ka3_file() -> PathBuf {
    scratch(
        "ka3.json",
        r#"{
            "vertices": ["1", "2", "3"],
            "arrows": [
                {"name": "a32", "from": "3", "to": "2"},
                {"name": "a21", "from": "2", "to": "1"}
            ]
        }"#,
    )
}

#[test]
fn demo_prints_the_expected_table_and_is_deterministic() {
    let first = run(&["demo"]);
    assert!(first.status.success(), "stderr: {}", stderr(&first));
    let text = stdout(&first);
    assert!(text.contains("nu(1) = 2/1"), "missing nu line:\n{text}");
    assert!(text.contains("nu(2/1) = 2"));
    assert!(text.contains("cover of 3/2/1: source 2/1; strong: true"));
    assert!(text.contains("S(1) = (0, 3) = 3/2/1"));
    assert!(text.contains("agreement: true"));
    let second = run(&["demo"]);
    assert_eq!(first.stdout, second.stdout, "demo output is not stable");
}

#[test]
fn demo_emits_structured_json_on_request() {
    let out = run(&["--format", "json", "demo"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["serre_of_1"], "3/2/1");
    assert_eq!(doc["cover_of_serre_1"]["strong"], true);
    assert_eq!(doc["classical_agreement"], true);
    assert_eq!(doc["tau_agreement"], true);
    assert_eq!(doc["tau_of_2"], "1");
}

#[test]
fn tau_of_a_named_module_prints_its_translate() {
    let alg = ka3_file();
    let out = run(&["module", "tau", alg.to_str().unwrap(), "2"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "tau(2) = 1  dims [1, 0, 0]");
    // a projective translates to zero, successfully
    let out = run(&["module", "tau", alg.to_str().unwrap(), "3/2/1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= 0"));
}

#[test]
fn ar_sequence_of_the_simple_prints_all_three_terms() {
    let alg = ka3_file();
    let out = run(&["module", "ar-seq", alg.to_str().unwrap(), "2"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "0 -> 1 -> 2/1 -> 2 -> 0");
}

#[test]
fn ar_quiver_lists_six_modules_and_dot_carries_the_translation() {
    let alg = ka3_file();
    let out = run(&["module", "ar-quiver", alg.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("indecomposables: 6"));
    assert!(text.contains("tau(2) = 1"));
    let out = run(&["module", "ar-quiver", alg.to_str().unwrap(), "--dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("dashed"));
    assert!(dot.contains("3/2/1"));
}

#[test]
fn mesh_queries_answer_in_both_formats() {
    let out = run(&["mesh", "hom", "(0,1)", "(0,1)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "dim hom((0, 1), (0, 1)) = 1");
    let out = run(&["mesh", "serre", "(0,1)", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["serre"], serde_json::json!([0, 3]));
    let out = run(&["mesh", "build", "--n", "3", "--window", "-6..6"]);
    assert!(stdout(&out).contains("usable i in [-3, 3]"));
}

#[test]
fn subcat_pipeline_resolves_names_and_coordinates_alike() {
    let named = scratch("sub_named.json", r#"["1", "2/1", "2"]"#);
    let out = run(&["subcat", "nu", named.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "nu(1) = 2/1\nnu(2/1) = 2\n");

    let coords = scratch("sub_coords.json", r#"[[0, 1], [0, 2], [1, 1]]"#);
    let out = run(&["subcat", "cover", coords.to_str().unwrap(), "(0, 3)"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "cover of (0, 3): source (0, 2); strong: true"
    );

    let out = run(&["subcat", "diagnostics", named.to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.contains("projective generators: 1, 2/1"));
    assert!(text.contains("injective generators: 2/1, 2"));
    assert!(text.contains("enough projectives: true"));
}

#[test]
fn malformed_inputs_exit_two_with_an_error_record() {
    let bad = scratch("bad.json", "this is not json");
    let out = run(&["algebra", "info", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let record: serde_json::Value = serde_json::from_str(&stderr(&out)).expect("JSON record");
    assert_eq!(record["error"]["code"], "malformed-input");

    let alg = ka3_file();
    let out = run(&["module", "tau", alg.to_str().unwrap(), "no-such-module"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["mesh", "build", "--n", "3", "--window", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn engine_refusals_exit_one_with_their_stable_code() {
    // a boundary vertex: well-formed request the mesh refuses
    let out = run(&["mesh", "hom", "(-6,1)", "(0,1)"]);
    assert_eq!(out.status.code(), Some(1));
    let record: serde_json::Value = serde_json::from_str(&stderr(&out)).expect("JSON record");
    assert_eq!(record["error"]["code"], "out-of-window");

    // a window too narrow for the mesh relations
    let out = run(&["mesh", "build", "--n", "4", "--window", "0..3"]);
    assert_eq!(out.status.code(), Some(1));
    let record: serde_json::Value = serde_json::from_str(&stderr(&out)).expect("JSON record");
    assert_eq!(record["error"]["code"], "window-too-small");
}

#[test]
fn json_outputs_are_deterministic_across_runs() {
    let named = scratch("sub_det.json", r#"["1", "2/1", "2"]"#);
    let a = run(&["--format", "json", "subcat", "diagnostics", named.to_str().unwrap()]);
    let b = run(&["--format", "json", "subcat", "diagnostics", named.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let alg = ka3_file();
    let a = run(&["--format", "json", "module", "ar-quiver", alg.to_str().unwrap()]);
    let b = run(&["--format", "json", "module", "ar-quiver", alg.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn representation_json_is_accepted_as_a_module_argument() {
    let alg = ka3_file();
    let module = scratch(
        "mod_s2.json",
        r#"{"dims": {"2": 1}, "maps": {}}"#,
    );
    let out = run(&["module", "tau", alg.to_str().unwrap(), module.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "tau(2) = 1  dims [1, 0, 0]");
    // inline JSON works the same way
    let out = run(&[
        "module",
        "tau",
        alg.to_str().unwrap(),
        r#"{"dims": {"2": 1}, "maps": {}}"#,
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "tau(2) = 1  dims [1, 0, 0]");
}
