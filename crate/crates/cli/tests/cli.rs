//! End-to-end checks of the `superschur` binary: JSON shape, exit codes and
//! byte-stable output.

use serde_json::Value;
use std::process::{Command, Output};

const WORKED: [&str; 10] = [
    "--m", "2", "--n", "3", "--lambda", "2,2/1,1", "--mu", "1", "--nu", "2,2,1",
];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(args)
        .env_remove("SUPERSCHUR_MAX_TERMS")
        .output()
        .expect("binary runs")
}

fn run_line(line: &str) -> Output {
    run(&line.split_whitespace().collect::<Vec<_>>())
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn with_worked<'a>(head: &[&'a str]) -> Vec<&'a str> {
    head.iter().copied().chain(WORKED).collect()
}

#[test]
fn enumerate_count_matches_items() {
    for kind in ["marked", "ssyt", "lr", "pictures"] {
        let out = run(&with_worked(&["enumerate", kind]));
        assert_eq!(out.status.code(), Some(0), "{kind}");
        let v = json(&out);
        assert_eq!(
            v["count"].as_u64().unwrap() as usize,
            v["items"].as_array().unwrap().len(),
            "{kind}"
        );
    }
    let marked = json(&run(&with_worked(&["enumerate", "marked"])));
    assert_eq!(marked["count"], 1);
    assert_eq!(
        marked["items"][0]["t_plus"]["rows"][1],
        serde_json::json!([4, 5])
    );
}

#[test]
fn empty_listing_is_exact() {
    let out = run_line("enumerate lr --m 2 --n 2 --lambda 2,2 --mu 2,2 --nu 1");
    assert_eq!(out.status.code(), Some(0));
    let compact: Value = json(&out);
    assert_eq!(compact.to_string(), r#"{"count":0,"items":[]}"#);
}

#[test]
fn bad_input_exits_two() {
    let cases = [
        "enumerate marked --m 2 --n 2 --lambda 2,x",
        "construct --m 2 --n 3 --lambda 2,2/1,1 --mu 3",
        "construct --m 2 --n 2 --lambda 1,2",
        "verify primitivity --seed-sweep nonexistent",
        "enumerate marked --m 2",
    ];
    for line in cases {
        assert_eq!(run_line(line).status.code(), Some(2), "{line}");
    }
}

#[test]
fn term_budget_exits_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(with_worked(&["construct"]))
        .env("SUPERSCHUR_MAX_TERMS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn det_identities_pass() {
    let out = run(&["verify", "det-identities", "--m", "3", "--s", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["pass"], true);
}

#[test]
fn primitivity_and_negative_control() {
    let out = run(&["verify", "primitivity", "--seed-sweep", "smoke"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["failed"], 0);
    let out = run_line("verify primitivity --seed-sweep smoke --inject-perturbation");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn construct_reports_polynomial_vectors() {
    let out = run(&with_worked(&["construct"]));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let vectors = v["vectors"].as_array().unwrap();
    assert!(!vectors.is_empty());
    for vec in vectors {
        assert_eq!(vec["membership"], "polynomial");
        assert!(vec["primitivity"]
            .as_object()
            .unwrap()
            .values()
            .all(|s| s == "zero"));
    }
}

#[test]
fn top_weight_gives_only_the_highest_vector() {
    let out = run_line("construct --m 2 --n 2 --lambda 2,1/1 --mu 2,1 --nu 1");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vectors"].as_array().unwrap().len(), 1);
    assert_eq!(v["vectors"][0]["k"], 0);
}

#[test]
fn output_is_byte_stable() {
    let args = ["sweep", "--seed-sweep", "smoke"];
    let a = run(&[&["--jobs", "1"], &args[..]].concat());
    let b = run(&[&["--jobs", "2"], &args[..]].concat());
    let c = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn json_out_matches_stdout() {
    let path = std::env::temp_dir().join(format!("superschur-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&with_worked(&["enumerate", "marked", "--json-out", p]));
    let written = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(out.stdout, written);
}
