//! End-to-end tests of the installed binary: config loading, flag overrides,
//! output redirection, and exit codes.

use std::io::Write;
use std::process::Command;

fn chain() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chain"))
}

#[test]
fn flags_override_the_config_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "omega_prime = 1").unwrap();
    writeln!(file, "N = 6").unwrap();
    writeln!(file, "T = 0.5").unwrap();
    writeln!(file, "samples = 3").unwrap();
    let out = chain()
        .args(["simulate", "--config"])
        .arg(file.path())
        .args(["--N", "8"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# N = 8\n"), "{text}");
    let rows = text.lines().filter(|l| !l.starts_with('#')).count();
    assert_eq!(rows, 1 + 3 * 8);
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.csv");
    let args = ["fields", "--N", "10", "--T", "0.3", "--omega-prime", "1"];
    let to_file = chain().args(args).arg("--out").arg(&path).output().unwrap();
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    let to_stdout = chain().args(args).output().unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}

#[test]
fn exit_codes_separate_check_failures_from_usage_errors() {
    let mut passing = tempfile::NamedTempFile::new().unwrap();
    writeln!(passing, "checks = gap-band").unwrap();
    let ok = chain()
        .args(["verify", "--N", "24", "--T", "1", "--omega-prime", "1"])
        .arg("--config")
        .arg(passing.path())
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));

    // The default profile has no velocity part, so the stiffness-scaling
    // control cannot observe a difference and reports failure.
    let mut control = tempfile::NamedTempFile::new().unwrap();
    writeln!(control, "checks = negative-control").unwrap();
    let failed = chain()
        .args(["verify", "--N", "24", "--T", "1", "--omega-prime", "1"])
        .arg("--config")
        .arg(control.path())
        .output()
        .unwrap();
    assert_eq!(failed.status.code(), Some(1));

    let usage = chain().args(["simulate", "--N", "12"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let msg = String::from_utf8(usage.stderr).unwrap();
    assert!(msg.contains("omega_prime"), "{msg}");
}
