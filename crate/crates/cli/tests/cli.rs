//! End-to-end behavior of the `quotori` binary and the dispatch library.

use std::io::Write;
use std::process::{Command as Process, Output, Stdio};

use quotori::corpus;
use quotori_cli::report::Report;
use quotori_cli::{run, run_batch, CliError, Command, Job, Source};
use serde_json::Value;

fn quotori(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Process::new(env!("CARGO_BIN_EXE_quotori"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(args: &[&str], stdin: Option<&str>) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = quotori(&all, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn job(command: Command, text: &str) -> Job {
    Job { command, source: Source::Text(text.into()), seed: None, bound: None, precision: None }
}

#[test]
fn platonic_icosahedral_example() {
    let v = json(&["platonic"], Some(r#"{"triple":[2,3,5]}"#));
    assert_eq!(v["finite"], true);
    assert_eq!(v["class"], "icosahedral family");
    assert_eq!(v["enumeration"]["order"], 60);
}

#[test]
fn platonic_hyperbolic_triple_is_unknown_within_the_bound() {
    let v = json(&["platonic", "--bound", "500"], Some(r#"{"triple":[2,3,7]}"#));
    assert_eq!(v["finite"], false);
    assert_eq!(v["enumeration"]["status"], "unknown");
}

#[test]
fn kummer_is_even_with_one_four_dimensional_class() {
    let v = json(&["even", "--corpus", "kummer4"], None);
    assert_eq!(v["even"], true);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0]["dim"], 4);
    assert_eq!(classes[0]["parity"], "even");
}

#[test]
fn pure_translation_generator_is_normalized_with_a_notice() {
    let v = json(&["verify", "--corpus", "pure_translation_rank2"], None);
    assert!(v["notice"].is_string());
    assert_eq!(v["lattice_index"], 2);
    assert_eq!(v["basis"], serde_json::json!([["1/2", "0"], ["0", "1"]]));
}

#[test]
fn input_file_and_stdin_agree() {
    let dir = std::env::temp_dir().join(format!("quotori-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("kummer4.json");
    std::fs::write(&path, corpus::text("kummer4").unwrap()).unwrap();
    let from_file = json(&["action", "--input", path.to_str().unwrap()], None);
    let from_stdin = json(&["action", "--input", "-"], corpus::text("kummer4"));
    assert_eq!(from_file, from_stdin);
    assert_eq!(from_file["class"], "quasi_free");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn malformed_input_exits_one_with_a_location() {
    let out = quotori(&["verify"], Some(r#"{"rank": 2, "generators": [{"linear": [[1, 0], [0, "x"]]}]}"#));
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("generators[0].linear[1][1]"), "{err}");
}

#[test]
fn unknown_fields_are_rejected() {
    let r = run(&job(Command::Verify, r#"{"rank": 2, "generators": [], "extra": 1}"#));
    assert!(matches!(r, Err(CliError::Validation(ref m)) if m.contains("extra")), "{r:?}");
}

#[test]
fn non_unimodular_generator_is_a_validation_error() {
    let r = run(&job(Command::Verify, r#"{"rank": 2, "generators": [{"linear": [[2, 0], [0, 1]]}]}"#));
    assert!(matches!(r, Err(CliError::Validation(_))), "{r:?}");
}

#[test]
fn action_on_a_group_that_is_not_even_exits_one() {
    let out = quotori(&["action", "--corpus", "klein_rank2"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_corpus_name_exits_one() {
    let out = quotori(&["even", "--corpus", "no_such_group"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes_partition_the_corpus() {
    for command in [Command::Verify, Command::Realize, Command::Even, Command::Jstruct, Command::Teich] {
        for (name, r) in run_batch(command, None, None, None) {
            assert!(r.is_ok(), "{command:?} {name}: {r:?}");
        }
    }
    for (name, r) in run_batch(Command::Action, None, None, None) {
        let even = quotori::hodge::is_even(
            &quotori::crystal::normalize_action(
                &corpus::load(&name).unwrap().crystal_data().unwrap(),
                quotori::groupcore::DEFAULT_ORDER_BOUND,
            )
            .unwrap()
            .group,
        )
        .unwrap()
        .even;
        match r {
            Ok(_) => assert!(even, "{name}"),
            Err(e) => assert!(!even && e.exit_code() == 1, "{name}: {e}"),
        }
    }
}

#[test]
fn batch_mode_isolates_failures() {
    let out = quotori(&["action", "--batch", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), corpus::names().len());
    assert!(entries.iter().any(|e| e["error"].is_string()));
    assert!(entries.iter().any(|e| e["report"]["class"] == "divisorial"));
}

#[test]
fn reports_round_trip_through_json() {
    for command in [Command::Verify, Command::Realize, Command::Even, Command::Jstruct, Command::Action, Command::Teich] {
        for (name, r) in run_batch(command, Some(1), None, None) {
            let Ok(report) = r else { continue };
            let text = serde_json::to_string(&report).unwrap();
            let back: Report = serde_json::from_str(&text).unwrap();
            assert_eq!(back, report, "{command:?} {name}");
        }
    }
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = ["teich", "--corpus", "rot4_rank2", "--format", "json", "--seed", "11"];
    let (a, b) = (quotori(&args, None), quotori(&args, None));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn period_matrix_checks_are_reported() {
    let v = json(&["teich", "--corpus", "rot4_rank2"], None);
    assert_eq!(v["types"].as_array().unwrap().len(), 2);
    assert_eq!(v["omega"]["positive"], true);
    assert_eq!(v["omega"]["invariant"], true);
    for t in v["types"].as_array().unwrap() {
        assert_eq!(t["component_dimension"], t["sampled_tangent_dimension"]);
    }
}

#[test]
fn text_output_mentions_the_verdict() {
    let out = quotori(&["action", "--corpus", "kummer4"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("quasi-free"), "{text}");
}
