#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Run {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn weylbound<S: AsRef<str>>(args: &[S]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_weylbound"))
        .args(args.iter().map(|a| a.as_ref()))
        .env_remove("WEYLBOUND_CACHE")
        .output()
        .expect("binary runs");
    Run {
        status: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn golden_cases() -> Vec<(String, Vec<String>)> {
    let text = std::fs::read_to_string(golden_dir().join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once('|').expect("name | args");
            (name.trim().to_string(), args.split_whitespace().map(String::from).collect())
        })
        .collect()
}

/// Golden file body: exit status, then stdout, then stderr.
pub fn render(run: &Run) -> String {
    format!("status: {}\n--- stdout\n{}--- stderr\n{}", run.status, run.stdout, run.stderr)
}

/// Compare every case against its committed file. With `UPDATE_GOLDEN=1`
/// missing or stale files are rewritten instead.
pub fn check_goldens() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (name, args) in golden_cases() {
        let path = golden_dir().join(format!("{name}.out"));
        let actual = render(&weylbound(&args));
        match std::fs::read(&path) {
            Ok(bytes) if bytes == actual.as_bytes() => {}
            _ if update => std::fs::write(&path, &actual).unwrap(),
            Ok(_) => mismatches.push(format!("{name}: output differs")),
            Err(_) => mismatches.push(format!("{name}: missing {}", path.display())),
        }
    }
    mismatches
}
