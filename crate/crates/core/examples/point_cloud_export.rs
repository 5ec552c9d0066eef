//! Writes CSV point clouds of the three surface types and of two rulings,
//! ready for any plotting tool. Output goes to the directory given as the
//! first argument (default: the system temp dir).
//!
//! ```bash
//! cargo run -p invgeo --example point_cloud_export -- /tmp/clouds
//! ```

use std::path::PathBuf;

use invgeo::cli;

fn main() {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir).expect("create output directory");

    let jobs: [(&str, &[&str]); 5] = [
        ("one_sheet.csv", &["sample", "--alpha", "0", "--beta", "-1", "--nu", "16", "--nv", "64"]),
        ("cone.csv", &["sample", "--alpha", "0", "--beta", "0", "--nu", "16", "--nv", "64"]),
        ("two_sheet.csv", &["sample", "--alpha", "0", "--beta", "1", "--nu", "16", "--nv", "64"]),
        ("rulings.csv", &["generators", "--matrix", r#"{"a":1,"b":0,"c":0,"d":-1}"#, "--steps", "32"]),
        (
            "orbit.csv",
            &["orbit", "--matrix", r#"{"a":0.5,"b":1.5,"c":-0.8333333333333334,"d":-0.5}"#, "--x", "3", "--y", "2", "--steps", "8"],
        ),
    ];
    for (name, args) in jobs {
        let path = dir.join(name);
        let path_str = path.to_string_lossy().into_owned();
        let argv = ["invgeo"].iter().chain(args).copied().chain(["--format", "csv", "--output", &path_str]);
        let out = cli::run(argv, None);
        if out.code != 0 {
            eprintln!("{name}: {}", out.stderr.trim_end());
            continue;
        }
        let rows = std::fs::read_to_string(&path).map(|s| s.lines().count() - 1).unwrap_or(0);
        println!("{} ({rows} rows)", path.display());
    }
}
