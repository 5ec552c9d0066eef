//! End-to-end runs of the `invgeo` binary against checked-in golden files.
//!
//! Regenerate with `INVGEO_BLESS=1 cargo test -p invgeo --test cli_golden`.

use std::process::{Command, Output};

mod common;

use common::{golden_dir, invgeo, CASES, IDENTITY_FLIP};

#[test]
fn golden_outputs_are_stable() {
    let bless = std::env::var_os("INVGEO_BLESS").is_some();
    let mut failures = Vec::new();
    for (name, args) in CASES {
        let first = invgeo(args);
        let second = invgeo(args);
        assert_eq!(first.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&first.stderr));
        assert_eq!(first.stdout, second.stdout, "{name}: two runs differ");
        let path = golden_dir().join(name);
        if bless {
            std::fs::write(&path, &first.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if expected != first.stdout {
            failures.push(*name);
        }
    }
    assert!(failures.is_empty(), "golden mismatch: {failures:?}");
}

fn error_doc(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stderr).unwrap_or_else(|e| panic!("stderr is not JSON ({e}): {}", String::from_utf8_lossy(&out.stderr)))
}

#[test]
fn malformed_input_exits_2_with_json() {
    for args in [
        &["decompose", "--matrix", "{\"a\":1,"][..],
        &["orbit", "--matrix", r#"{"a":1,"b":0,"c":0,"d":1,"e":5}"#, "--x", "1", "--y", "0"],
        &["matfun", "--matrix", "@/nonexistent/matrix.json"],
        &["classify", "--alpha", "zero", "--beta", "1"],
        &["sample", "--alpha", "0"],
        &["no-such-command"],
        &["sample", "--alpha", "0", "--beta", "-1", "--format", "xml"],
    ] {
        let out = invgeo(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let doc = error_doc(&out);
        assert!(doc["error"].is_string() && doc["detail"].is_string(), "{args:?}: {doc}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn domain_errors_exit_1_with_code() {
    let cases: &[(&[&str], &str)] = &[
        (&["roots", "--a", "1", "--b", "0"], "degenerate_parameter"),
        (&["classify", "--matrix", r#"{"a":1,"b":2,"c":3,"d":4}"#], "not_an_involution"),
        (&["generators", "--matrix", r#"{"a":1,"b":2,"c":3,"d":4}"#], "not_on_surface"),
        (&["generators", "--matrix", IDENTITY_FLIP, "--seed-matrix", r#"{"a":0,"b":1,"c":0,"d":0}"#], "degenerate_seed"),
        (&["quat", "--root", "neg", "--t", "1.5707963267948966", "--phi", "0"], "singular_parameter"),
        (&["matfun", "--matrix", r#"{"a":0,"b":1,"c":-1,"d":0}"#], "complex_eigenvalues"),
        (&["matfun", "--matrix", r#"{"a":-1,"b":0,"c":0,"d":4}"#], "function_undefined_at_eigenvalue"),
        (&["decompose", "--matrix", r#"{"a":2,"b":0,"c":0,"d":1}"#], "not_an_involution"),
        (&["orbit", "--matrix", IDENTITY_FLIP, "--x", "1", "--y", "0", "--steps", "0"], "invalid_count"),
        (&["sample", "--alpha", "0", "--beta", "1", "--nu", "0"], "invalid_count"),
    ];
    for (args, code) in cases {
        let out = invgeo(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(error_doc(&out)["error"], *code, "{args:?}");
    }
}

#[test]
fn output_flag_and_matrix_files() {
    let dir = std::env::temp_dir().join(format!("invgeo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let m = dir.join("m.json");
    std::fs::write(&m, IDENTITY_FLIP).unwrap();
    let target = dir.join("out.json");
    let arg = format!("@{}", m.display());
    let out = invgeo(&["bell", "--matrix", &arg, "--output", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let inline = invgeo(&["bell", "--matrix", IDENTITY_FLIP]);
    assert_eq!(std::fs::read(&target).unwrap(), inline.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tolerance_comes_from_environment() {
    let near = r#"{"a":1,"b":0,"c":0,"d":-1.000001}"#;
    let strict = invgeo(&["classify", "--matrix", near]);
    assert_eq!(strict.status.code(), Some(1));
    let loose = Command::new(env!("CARGO_BIN_EXE_invgeo")).args(["classify", "--matrix", near]).env("INVGEO_TOL", "1e-5").output().unwrap();
    assert_eq!(loose.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_invgeo"))
        .args(["classify", "--alpha", "0", "--beta", "1"])
        .env("INVGEO_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
