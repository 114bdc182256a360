mod common;

use std::process::Command;

fn run_with_env(cache: &std::path::Path, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weylbound"))
        .args(args)
        .env("WEYLBOUND_CACHE", cache)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn env_cache_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lengths.json");
    let args = ["length", "exact", "G2", "--p", "7", "--lam", "4,3", "-v"];
    let (status, first, err) = run_with_env(&path, &args);
    assert_eq!(status, 0);
    assert!(err.contains("loaded 0 cache entries"));
    let stored: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(stored["schema"], "v1");
    let n = stored["entries"].as_array().unwrap().len();
    assert!(n > 1);
    let (_, second, err) = run_with_env(&path, &args);
    assert_eq!(first, second);
    assert!(err.contains(&format!("loaded {n} cache entries")));
}

#[test]
fn corrupt_or_stale_cache_warns_and_recomputes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lengths.json");
    let args = ["length", "exact", "A2", "--p", "3", "--lam", "2,2"];
    let clean = common::weylbound(&args).stdout;
    for bad in ["not json", "{\"schema\":\"v0\",\"entries\":[]}"] {
        std::fs::write(&path, bad).unwrap();
        let (status, out, err) = run_with_env(&path, &args);
        assert_eq!(status, 0);
        assert_eq!(out, clean);
        assert!(err.starts_with("warning:"), "{err}");
    }
}

#[test]
fn explicit_flag_overrides_env() {
    let dir = tempfile::tempdir().unwrap();
    let env_path = dir.path().join("env.json");
    let flag_path = dir.path().join("flag.json");
    let (status, _, _) = run_with_env(
        &env_path,
        &["length", "exact", "A1", "--p", "3", "--lam", "7", "--cache", flag_path.to_str().unwrap()],
    );
    assert_eq!(status, 0);
    assert!(flag_path.exists());
    assert!(!env_path.exists());
}
