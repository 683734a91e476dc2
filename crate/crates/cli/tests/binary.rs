use std::io::Write;
use std::process::Command;

fn splitq() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_splitq"));
    cmd.env_remove("SPLITQ_BUDGET");
    cmd
}

#[test]
fn exit_codes() {
    let ok = splitq().args(["sigma", "--type", "1:4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().contains("\"status\": \"ok\""));

    let usage = splitq().args(["sigma", "--type", "1:3"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    assert!(!usage.stderr.is_empty());

    let budget = splitq()
        .env("SPLITQ_BUDGET", "10")
        .args(["verify", "--m", "2", "--q", "2"])
        .output()
        .unwrap();
    assert_eq!(budget.status.code(), Some(3));

    let bad_env = splitq().env("SPLITQ_BUDGET", "lots").args(["types", "--size", "2"]).output().unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn budget_flag_beats_environment() {
    let out = splitq()
        .env("SPLITQ_BUDGET", "10")
        .args(["verify", "--m", "1", "--q", "3", "--budget", "100"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn matrix_file_from_temp_dir() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("jordan.json");
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(br#"{"p":5,"e":1,"rows":2,"cols":2,"entries":[[3,0],[1,3]]}"#).unwrap();
    drop(f);
    let out = splitq()
        .args(["oracle", "count-splitting", "--matrix"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["result"]["count"], 5);

    let out = splitq().args(["oracle", "classify", "--matrix"]).arg(&path).output().unwrap();
    let r: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["result"]["type"], "1:2");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let run = || splitq().args(["sigma", "--all-of-size", "4", "--eval", "7"]).output().unwrap().stdout;
    assert_eq!(run(), run());
}
