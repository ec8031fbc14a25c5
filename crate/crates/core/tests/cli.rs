use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use multimorse::field::PrimeField;
use multimorse::generators::{build_example, ExampleName};
use multimorse::io;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_multimorse"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

#[test]
fn check_lower_i_shows_tight_bound() {
    let path = fixture("lower_i.mfcc");
    let out = run(&["check", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"]["status"], "PASS");
    let top = report["grades"].as_array().unwrap().iter().find(|g| g["grade"] == "1,1,1").unwrap();
    let q2 = &top["degrees"][2];
    assert_eq!(q2["critical"], 0);
    assert_eq!(q2["betti"], serde_json::json!([1, 0, 0, 0]));
    assert_eq!(top["degrees"][0]["betti"][3], 1);
    assert_eq!(q2["lower"]["with_remainder"]["slack"], 0);
    assert_eq!(q2["lower"]["with_remainder"]["holds"], true);
}

#[test]
fn broken_boundary_exits_three() {
    let path = fixture("broken_boundary.mfcc");
    assert_eq!(run(&["check", path.to_str().unwrap()], None).status.code(), Some(3));
    assert_eq!(run(&["validate", path.to_str().unwrap()], None).status.code(), Some(1));
    assert_eq!(run(&["check", "/nonexistent.mfcc"], None).status.code(), Some(3));
}

#[test]
fn random_pipes_into_check() {
    let random = run(&["random", "--seed", "7", "--params", "3", "--cells", "25"], None);
    assert_eq!(random.status.code(), Some(0));
    let check = run(&["check", "-"], Some(&random.stdout));
    assert_eq!(check.status.code(), Some(0), "{}", String::from_utf8_lossy(&check.stdout));
    let again = run(&["random", "--seed", "7", "--params", "3", "--cells", "25"], None);
    assert_eq!(random.stdout, again.stdout);
}

#[test]
fn example_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("upper_iii.mfcc");
    let out = run(&["example", "upper_iii", "-o", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), std::fs::read_to_string(fixture("upper_iii.mfcc")).unwrap());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["check"], None).status.code(), Some(2));
    assert_eq!(run(&["--format", "xml", "check", "-"], None).status.code(), Some(2));
    let path = fixture("lower_i.mfcc");
    assert_eq!(run(&["pages", path.to_str().unwrap(), "--grade", "1,1"], None).status.code(), Some(2));
}

#[test]
fn pages_and_betti_on_fixture() {
    let path = fixture("sphere_2.mfcc");
    let out = run(&["pages", path.to_str().unwrap(), "--grade", "1,1"], None);
    assert_eq!(out.status.code(), Some(0));
    let pages: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(pages["n"], 2);
    let out = run(&["--format", "csv", "betti", path.to_str().unwrap(), "--grades", "1,1"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("u1,u2,p,q,value\n"));
    assert_eq!(text.lines().count(), 1 + 2 * 3);
    let quiet = run(&["--quiet", "check", path.to_str().unwrap()], None);
    assert_eq!((quiet.status.code(), quiet.stdout.len()), (Some(0), 0));
}

#[test]
fn fixtures_match_builders() {
    for name in ExampleName::ALL {
        let text = std::fs::read_to_string(fixture(&format!("{name}.mfcc"))).unwrap();
        let parsed = io::parse(&text, None).unwrap();
        let built = build_example(name, PrimeField::binary()).unwrap().filtration;
        assert_eq!(io::write_mfcc(&parsed), io::write_mfcc(&built), "{name}");
        assert_eq!(io::write_portable(&parsed), text, "{name}");
    }
}

#[test]
fn golden_report_is_stable() {
    let golden = std::fs::read_to_string(fixture("lower_i.report.json")).unwrap();
    let path = fixture("lower_i.mfcc");
    let first = run(&["check", path.to_str().unwrap()], None);
    let second = run(&["check", path.to_str().unwrap()], None);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(String::from_utf8(first.stdout).unwrap(), golden);
}
