use std::path::PathBuf;
use std::process::{Command, Output};

use braidkit::core::presentations::builtin;
use braidkit::io::save_presentation;
use serde_json::Value;

fn braidkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidkit")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("braidkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn hopf_check_passes() {
    let out = braidkit(&["check", "hopf", "su-qphi2", "--degree", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = report(&out);
    assert_eq!(v["schema"], "braidkit-report/1");
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    assert!(v.get("wall_clock_ms").is_none());
}

#[test]
fn scalar_braiding_search() {
    let out = braidkit(&["search", "su2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["pass"], true);
}

#[test]
fn representation_with_phase() {
    let out = braidkit(&["rep", "--l", "1", "--q", "0.7", "--phi", "0.3", "--psi", "1.1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["parameters"]["psi"], 1.1);
}

#[test]
fn output_is_byte_stable() {
    let a = braidkit(&["check", "pairing"]);
    let b = braidkit(&["check", "pairing"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn timing_is_opt_in() {
    let out = braidkit(&["--timing", "witness"]);
    assert!(out.status.success());
    assert!(report(&out)["wall_clock_ms"].is_u64());
}

#[test]
fn usage_errors() {
    assert_eq!(braidkit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(braidkit(&["check", "hopf", "nope"]).status.code(), Some(2));
    assert_eq!(braidkit(&["rep", "--l", "0.3"]).status.code(), Some(2));
    assert_eq!(braidkit(&["limit", "--steps", "1"]).status.code(), Some(2));
    let missing = braidkit(&["--presentation", "/nonexistent/p.json", "check", "hopf"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(!missing.stderr.is_empty());
}

#[test]
fn presentation_files() {
    let path = scratch("hat-u2.json");
    save_presentation(&builtin("hat-u2").unwrap(), &path).unwrap();
    let p = path.to_str().unwrap();
    let out = braidkit(&["--presentation", p, "check", "hopf", "--degree", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(report(&out)["parameters"]["presentation"], p);
    let out = braidkit(&["--presentation", p, "confluence"]);
    assert!(out.status.success());

    // a broken file is refused before any suite runs
    let bad = scratch("broken.json");
    std::fs::write(&bad, "{\"name\": \"x\"}").unwrap();
    let out = braidkit(&["--presentation", bad.to_str().unwrap(), "check", "hopf"]);
    assert_eq!(out.status.code(), Some(2));
}
