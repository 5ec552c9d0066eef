//! Golden-file cases shared by the CLI tests and the acceptance run.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const IDENTITY_FLIP: &str = r#"{"a":1,"b":0,"c":0,"d":-1}"#;

/// (golden file, arguments)
pub const CASES: &[(&str, &[&str])] = &[
    ("roots_general.json", &["roots", "--of", "identity", "--a", "0.3", "--b", "2"]),
    ("roots_case.json", &["roots", "--family", "upper_b_minus_plus", "--b", "-2.5"]),
    ("roots_skew_sample.json", &["roots", "--of", "neg", "--count", "5", "--seed", "3"]),
    ("classify_quadric.json", &["classify", "--alpha", "0", "--beta", "-1"]),
    ("classify_family.json", &["classify", "--matrix", r#"{"a":0.3,"b":2,"c":0.455,"d":-0.3}"#]),
    ("bell.json", &["bell", "--matrix", IDENTITY_FLIP, "--alpha", "0"]),
    ("bell_inverse.json", &["bell", "--x", "1", "--y", "2", "--z", "-0.5", "--alpha", "3"]),
    ("generators.json", &["generators", "--matrix", IDENTITY_FLIP, "--seed", "11"]),
    ("generators.csv", &["generators", "--matrix", IDENTITY_FLIP, "--seed", "11", "--steps", "4", "--format", "csv"]),
    ("quat_matrix.json", &["quat", "--matrix", r#"{"a":0,"b":1,"c":-1,"d":0}"#]),
    ("quat_root.json", &["quat", "--root", "neg", "--t", "0.7853981633974483", "--phi", "0"]),
    ("matfun_branches.json", &["matfun", "--matrix", r#"{"a":1,"b":0,"c":0,"d":4}"#, "--all-branches"]),
    ("matfun_jordan.json", &["matfun", "--matrix", r#"{"a":4,"b":1,"c":0,"d":4}"#, "--function", "sqrt"]),
    ("sample.csv", &["sample", "--alpha", "0", "--beta", "-1", "--nu", "16", "--nv", "64", "--format", "csv"]),
    ("sample_cone.json", &["sample", "--alpha", "2", "--beta", "1", "--nu", "2", "--nv", "3"]),
    ("decompose.json", &["decompose", "--matrix", r#"{"a":0,"b":2,"c":0.5,"d":0}"#]),
    ("orbit.csv", &["orbit", "--matrix", r#"{"a":0,"b":1,"c":-1,"d":0}"#, "--x", "1", "--y", "0", "--steps", "4", "--format", "csv"]),
];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn invgeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invgeo")).args(args).env_remove("INVGEO_TOL").output().expect("spawn invgeo")
}
