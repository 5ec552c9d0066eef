//! The `invgeo` command line.
//!
//! [`run`] parses arguments, dispatches to the library and returns the exit
//! code with the document to print, so the whole front end can be tested
//! without spawning a process.
//!
//! Exit codes: `0` success, `1` domain error, `2` usage error or malformed
//! input. Errors are JSON documents `{"error": code, "detail": message}`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::mat2::{Mat2, Tolerance, Vec2};
use crate::matfun::{count_real_roots, jordan2, matrix_function, sqrt_branches, ScalarFunction};
use crate::quadric::{
    classify_quadric, from_bell, generator_directions, generator_identity_residual, on_asymptotic_cone, sample_ruling, sample_surface,
    to_bell, BellPoint, LocusParams, SurfacePoint,
};
use crate::roots::{
    classify_involution, involution_residual, make_case_root, make_general_root, make_skew_root, sample_involutions, sample_params,
    skew_involution_residual, RootFamily, SkewRootParams,
};
use crate::splitquat::{decompose_root, root_matrix_identity, root_matrix_neg, RootTarget, SplitQuat};
use crate::xform::{decompose_case, decompose_general, orbit};

/// Environment variable that overrides the default absolute tolerance.
pub const TOL_ENV: &str = "INVGEO_TOL";

/// Header of point-cloud CSV files.
pub const POINT_CSV_HEADER: &str = "x,y,z,x1,x2,x3,x4,tag";
/// Header of orbit CSV files.
pub const ORBIT_CSV_HEADER: &str = "step,x,y";

#[derive(Debug, Parser)]
#[command(name = "invgeo", version, about = "Square roots of ±I₂ and the geometry of 2×2 matrices")]
pub struct Cli {
    /// Output format; csv is available for sample, generators and orbit.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the document here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Square roots of I₂.
    Identity,
    /// Square roots of -I₂.
    Neg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum CaseTag {
    Identity,
    NegIdentity,
    UpperBPlusMinus,
    UpperBMinusPlus,
    LowerCPlusMinus,
    LowerCMinusPlus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionName {
    Sqrt,
    Square,
}

/// A matrix given inline as JSON (`{"a":1,"b":0,"c":0,"d":1}`) or as `@path`.
fn parse_matrix(s: &str) -> Result<Mat2, String> {
    let text = match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?,
        None => s.to_owned(),
    };
    serde_json::from_str(&text).map_err(|e| format!("malformed matrix: {e}"))
}

fn parse_quat(s: &str) -> Result<SplitQuat, String> {
    let text = match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?,
        None => s.to_owned(),
    };
    serde_json::from_str(&text).map_err(|e| format!("malformed split-quaternion: {e}"))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build square roots of I₂ or -I₂ from parameters, or sample them.
    #[command(allow_negative_numbers = true)]
    Roots {
        #[arg(long = "of", value_enum, default_value_t = Target::Identity)]
        of: Target,
        /// One of the special families; otherwise the general family is used.
        #[arg(long, value_enum)]
        family: Option<CaseTag>,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        b: Option<f64>,
        #[arg(long)]
        c: Option<f64>,
        /// Draw this many seeded samples instead.
        #[arg(long)]
        count: Option<usize>,
        /// Parameters are drawn from [-range, range].
        #[arg(long, default_value_t = 10.0)]
        range: f64,
    },
    /// Classify the quadric S(alpha, beta), or identify the family of an involution.
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(long, requires = "beta", conflicts_with = "matrix")]
        alpha: Option<f64>,
        #[arg(long, requires = "alpha")]
        beta: Option<f64>,
        #[arg(long, value_parser = parse_matrix)]
        matrix: Option<Mat2>,
    },
    /// Bell coordinates of a matrix, or the matrix at given Bell coordinates.
    #[command(allow_negative_numbers = true)]
    Bell {
        #[arg(long, value_parser = parse_matrix, required_unless_present = "x", conflicts_with_all = ["x", "y", "z"])]
        matrix: Option<Mat2>,
        /// Hyperplane trace; defaults to the trace of --matrix.
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, requires_all = ["y", "z", "alpha"])]
        x: Option<f64>,
        #[arg(long)]
        y: Option<f64>,
        #[arg(long)]
        z: Option<f64>,
    },
    /// The two rulings of S(0,-1) through a point.
    #[command(allow_negative_numbers = true)]
    Generators {
        #[arg(long, value_parser = parse_matrix)]
        matrix: Mat2,
        /// Seed matrix X for (A±I)X(A∓I); random (from --seed) when omitted.
        #[arg(long, value_parser = parse_matrix)]
        seed_matrix: Option<Mat2>,
        #[arg(long, default_value_t = -2.0)]
        t_min: f64,
        #[arg(long, default_value_t = 2.0)]
        t_max: f64,
        #[arg(long, default_value_t = 8)]
        steps: usize,
    },
    /// Convert between matrices and split-quaternions, or build a parametrized root.
    #[command(allow_negative_numbers = true)]
    Quat {
        #[arg(long, value_parser = parse_matrix, conflicts_with_all = ["quat", "root"])]
        matrix: Option<Mat2>,
        #[arg(long, value_parser = parse_quat, conflicts_with = "root")]
        quat: Option<SplitQuat>,
        /// Square root of 1 (identity) or of -1 (neg) at (t, phi).
        #[arg(long, value_enum, requires_all = ["t", "phi"])]
        root: Option<Target>,
        #[arg(long)]
        t: Option<f64>,
        #[arg(long)]
        phi: Option<f64>,
    },
    /// Evaluate a function of a matrix through its Jordan form.
    #[command(allow_negative_numbers = true)]
    Matfun {
        #[arg(long, value_parser = parse_matrix)]
        matrix: Mat2,
        #[arg(long, value_enum, default_value_t = FunctionName::Sqrt)]
        function: FunctionName,
        /// List every real square root instead of the principal value.
        #[arg(long)]
        all_branches: bool,
    },
    /// Point cloud over the surface S(alpha, beta).
    #[command(allow_negative_numbers = true)]
    Sample {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 16)]
        nu: usize,
        #[arg(long, default_value_t = 64)]
        nv: usize,
    },
    /// Factor a square root of I₂ into elementary plane transformations.
    #[command(allow_negative_numbers = true)]
    Decompose {
        #[arg(long, value_parser = parse_matrix)]
        matrix: Mat2,
    },
    /// Iterate a matrix on a point of the plane.
    #[command(allow_negative_numbers = true)]
    Orbit {
        #[arg(long, value_parser = parse_matrix)]
        matrix: Mat2,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        y: f64,
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    /// Document for standard output (empty when written to `--output`).
    pub stdout: String,
    /// Error document, if any.
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, error: &str, detail: impl Into<String>) -> Self {
        let doc = json!({ "error": error, "detail": detail.into() });
        Self { code, stdout: String::new(), stderr: format!("{doc}\n") }
    }
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = Result<String, Failure>;

/// Runs one command line. `env_tol` is the value of [`TOL_ENV`], if set.
pub fn run<I, T>(args: I, env_tol: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Outcome {
                    code: if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { 2 } else { 0 },
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                ErrorKind::ValueValidation => Outcome::fail(2, "malformed_input", e.to_string().trim_end()),
                _ => Outcome::fail(2, "usage", e.to_string().trim_end()),
            };
        }
    };
    let tol = match tolerance_from_env(env_tol) {
        Ok(t) => t,
        Err(detail) => return Outcome::fail(2, "usage", detail),
    };
    let body = match dispatch(&cli, tol) {
        Ok(body) => body,
        Err(Failure::Domain(e)) => return Outcome::fail(1, e.code(), e.to_string()),
        Err(Failure::Usage(detail)) => return Outcome::fail(2, "usage", detail),
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(2, "io", format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome::ok(body),
    }
}

fn tolerance_from_env(env_tol: Option<&str>) -> Result<Tolerance, String> {
    let Some(raw) = env_tol else { return Ok(Tolerance::default()) };
    let abs: f64 = raw.trim().parse().map_err(|_| format!("{TOL_ENV} is not a number: {raw:?}"))?;
    Tolerance::with_abs(abs).map_err(|e| format!("{TOL_ENV}: {e}"))
}

fn doc(v: impl Serialize) -> CmdResult {
    let mut s = serde_json::to_string(&v).map_err(|e| Failure::Usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn require_json(format: Format, cmd: &str) -> Result<(), Failure> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(Failure::Usage(format!("csv output is not available for `{cmd}`"))),
    }
}

fn missing(flag: &str) -> Failure {
    Failure::Usage(format!("missing required flag --{flag}"))
}

fn dispatch(cli: &Cli, tol: Tolerance) -> CmdResult {
    match &cli.command {
        Command::Roots { of, family, a, b, c, count, range } => {
            require_json(cli.format, "roots")?;
            match count {
                Some(n) => cmd_roots_sample(*of, *n, cli.seed, *range),
                None => cmd_roots(*of, *family, *a, *b, *c),
            }
        }
        Command::Classify { alpha, beta, matrix } => {
            require_json(cli.format, "classify")?;
            match (alpha, beta, matrix) {
                (Some(alpha), Some(beta), _) => doc(classify_quadric(LocusParams::new(*alpha, *beta)?)),
                (_, _, Some(m)) => {
                    let family = classify_involution(m, tol)?;
                    doc(json!({ "family": family, "residual": involution_residual(m) }))
                }
                _ => Err(Failure::Usage("give --alpha and --beta, or --matrix".into())),
            }
        }
        Command::Bell { matrix, alpha, x, y, z } => {
            require_json(cli.format, "bell")?;
            match matrix {
                Some(m) => {
                    let p = to_bell(m, alpha.unwrap_or_else(|| m.trace()), tol)?;
                    doc(json!({ "bell": p, "on_asymptotic_cone": on_asymptotic_cone(m, tol) }))
                }
                None => {
                    let p = BellPoint {
                        x: x.ok_or_else(|| missing("x"))?,
                        y: y.ok_or_else(|| missing("y"))?,
                        z: z.ok_or_else(|| missing("z"))?,
                        alpha: alpha.ok_or_else(|| missing("alpha"))?,
                    };
                    doc(json!({ "bell": p, "matrix": from_bell(p)? }))
                }
            }
        }
        Command::Generators { matrix, seed_matrix, t_min, t_max, steps } => {
            cmd_generators(cli, tol, matrix, seed_matrix.as_ref(), *t_min, *t_max, *steps)
        }
        Command::Quat { matrix, quat, root, t, phi } => {
            require_json(cli.format, "quat")?;
            cmd_quat(tol, matrix.as_ref(), quat.as_ref(), *root, *t, *phi)
        }
        Command::Matfun { matrix, function, all_branches } => {
            require_json(cli.format, "matfun")?;
            cmd_matfun(tol, matrix, *function, *all_branches)
        }
        Command::Sample { alpha, beta, nu, nv } => {
            let p = LocusParams::new(*alpha, *beta)?;
            let points = sample_surface(p, *nu, *nv)?;
            match cli.format {
                Format::Csv => Ok(points_csv(&points)),
                Format::Json => doc(json!({ "class": classify_quadric(p), "points": points })),
            }
        }
        Command::Decompose { matrix } => {
            require_json(cli.format, "decompose")?;
            let family = classify_involution(matrix, tol)?;
            let d = match family {
                RootFamily::General { .. } => decompose_general(matrix, tol)?,
                other => decompose_case(other)?,
            };
            let residual = d.recompose().max_diff(matrix);
            doc(json!({ "family": family, "decomposition": d, "recompose_residual": residual }))
        }
        Command::Orbit { matrix, x, y, steps } => {
            let pts = orbit(matrix, Vec2::new(*x, *y)?, *steps)?;
            match cli.format {
                Format::Csv => {
                    let mut s = format!("{ORBIT_CSV_HEADER}\n");
                    for (i, p) in pts.iter().enumerate() {
                        let _ = writeln!(s, "{i},{:?},{:?}", p.x(), p.y());
                    }
                    Ok(s)
                }
                Format::Json => {
                    let rows: Vec<[f64; 2]> = pts.iter().map(|p| [p.x(), p.y()]).collect();
                    doc(json!({ "matrix": matrix, "points": rows }))
                }
            }
        }
    }
}

fn cmd_roots(of: Target, family: Option<CaseTag>, a: Option<f64>, b: Option<f64>, c: Option<f64>) -> CmdResult {
    match of {
        Target::Identity => {
            let fam = match family {
                None => RootFamily::General { a: a.ok_or_else(|| missing("a"))?, b: b.ok_or_else(|| missing("b"))? },
                Some(CaseTag::Identity) => RootFamily::Identity,
                Some(CaseTag::NegIdentity) => RootFamily::NegIdentity,
                Some(CaseTag::UpperBPlusMinus) => RootFamily::UpperBPlusMinus { b: b.ok_or_else(|| missing("b"))? },
                Some(CaseTag::UpperBMinusPlus) => RootFamily::UpperBMinusPlus { b: b.ok_or_else(|| missing("b"))? },
                Some(CaseTag::LowerCPlusMinus) => RootFamily::LowerCPlusMinus { c: c.ok_or_else(|| missing("c"))? },
                Some(CaseTag::LowerCMinusPlus) => RootFamily::LowerCMinusPlus { c: c.ok_or_else(|| missing("c"))? },
            };
            let m = match fam {
                RootFamily::General { a, b } => make_general_root(a, b)?,
                other => make_case_root(other)?,
            };
            doc(json!({ "of": "identity", "family": fam, "matrix": m, "residual": involution_residual(&m) }))
        }
        Target::Neg => {
            if family.is_some() {
                return Err(Failure::Usage("--family applies to --of identity only".into()));
            }
            let p = SkewRootParams { a: a.ok_or_else(|| missing("a"))?, b: b.ok_or_else(|| missing("b"))? };
            let m = make_skew_root(p)?;
            doc(json!({ "of": "neg", "params": p, "matrix": m, "residual": skew_involution_residual(&m) }))
        }
    }
}

fn cmd_roots_sample(of: Target, n: usize, seed: u64, range: f64) -> CmdResult {
    let (matrices, residual): (Vec<Mat2>, fn(&Mat2) -> f64) = match of {
        Target::Identity => (sample_involutions(n, seed, range)?, involution_residual),
        Target::Neg => {
            let ms = sample_params(n, seed, range)?
                .into_iter()
                .map(|(a, b)| make_skew_root(SkewRootParams { a, b }))
                .collect::<Result<Vec<_>, _>>()?;
            (ms, skew_involution_residual)
        }
    };
    let residuals: Vec<f64> = matrices.iter().map(residual).collect();
    let max = residuals.iter().copied().fold(0.0, f64::max);
    let of = match of {
        Target::Identity => "identity",
        Target::Neg => "neg",
    };
    doc(json!({ "of": of, "seed": seed, "range": range, "matrices": matrices, "max_residual": max }))
}

/// Seed matrices tried before giving up on a random seed.
const SEED_ATTEMPTS: usize = 32;

fn cmd_generators(cli: &Cli, tol: Tolerance, a: &Mat2, seed: Option<&Mat2>, t_min: f64, t_max: f64, steps: usize) -> CmdResult {
    let (pair, used) = match seed {
        Some(x) => (generator_directions(a, x, tol)?, *x),
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let mut last = Error::DegenerateSeed;
            let mut found = None;
            for _ in 0..SEED_ATTEMPTS {
                let x = Mat2::new(
                    rng.random_range(-1.0..1.0),
                    rng.random_range(-1.0..1.0),
                    rng.random_range(-1.0..1.0),
                    rng.random_range(-1.0..1.0),
                )?;
                match generator_directions(a, &x, tol) {
                    Ok(pair) => {
                        found = Some((pair, x));
                        break;
                    }
                    Err(e) => last = e,
                }
            }
            found.ok_or(last)?
        }
    };
    match cli.format {
        Format::Json => doc(json!({
            "matrix": a,
            "seed_matrix": used,
            "u": pair.u,
            "v": pair.v,
            "identity_residual": generator_identity_residual(a, &pair),
        })),
        Format::Csv => {
            let mut points = sample_ruling(a, &pair.u, t_min, t_max, steps, tol)?;
            points.extend(sample_ruling(a, &pair.v, t_min, t_max, steps, tol)?);
            Ok(points_csv(&points))
        }
    }
}

fn cmd_quat(
    tol: Tolerance,
    matrix: Option<&Mat2>,
    quat: Option<&SplitQuat>,
    root: Option<Target>,
    t: Option<f64>,
    phi: Option<f64>,
) -> CmdResult {
    let describe = |q: &SplitQuat| json!({ "quat": q, "matrix": q.to_matrix(), "modulus": q.modulus(), "class": q.classify(tol) });
    match (matrix, quat, root) {
        (Some(m), _, _) => doc(describe(&SplitQuat::from_matrix(m))),
        (_, Some(q), _) => doc(describe(q)),
        (_, _, Some(target)) => {
            let (t, phi) = (t.ok_or_else(|| missing("t"))?, phi.ok_or_else(|| missing("phi"))?);
            let (m, which) = match target {
                Target::Identity => (root_matrix_identity(t, phi)?, RootTarget::Identity),
                Target::Neg => (root_matrix_neg(t, phi)?, RootTarget::Neg),
            };
            let q = SplitQuat::from_matrix(&m);
            let d = decompose_root(t, phi, which)?;
            doc(json!({ "quat": q, "matrix": m, "square": q * q, "decomposition": d }))
        }
        _ => Err(Failure::Usage("give one of --matrix, --quat or --root".into())),
    }
}

fn cmd_matfun(tol: Tolerance, m: &Mat2, function: FunctionName, all_branches: bool) -> CmdResult {
    let jordan = jordan2(m, tol)?;
    if all_branches {
        if function != FunctionName::Sqrt {
            return Err(Failure::Usage("--all-branches applies to --function sqrt".into()));
        }
        let br = sqrt_branches(m, tol)?;
        return doc(json!({
            "function": "sqrt",
            "jordan": jordan,
            "primary": br.primary,
            "non_primary": br.non_primary,
            "infinite_family": br.infinite_family,
            "count": count_real_roots(m, tol)?,
        }));
    }
    let (name, f) = match function {
        FunctionName::Sqrt => ("sqrt", ScalarFunction::sqrt()),
        FunctionName::Square => ("square", ScalarFunction::square()),
    };
    doc(json!({ "function": name, "jordan": jordan, "value": matrix_function(m, &f, tol)? }))
}

fn points_csv(points: &[SurfacePoint]) -> String {
    let mut s = format!("{POINT_CSV_HEADER}\n");
    for p in points {
        let [x1, x2, x3, x4] = p.matrix.entries();
        let _ = writeln!(s, "{:?},{:?},{:?},{:?},{:?},{:?},{:?},{}", p.bell.x, p.bell.y, p.bell.z, x1, x2, x3, x4, p.tag.as_str());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn run_ok(args: &[&str]) -> Value {
        let out = run(std::iter::once("invgeo").chain(args.iter().copied()), None);
        assert_eq!(out.code, 0, "{out:?}");
        serde_json::from_str(&out.stdout).unwrap()
    }

    fn run_err(args: &[&str]) -> (i32, Value) {
        let out = run(std::iter::once("invgeo").chain(args.iter().copied()), None);
        assert_ne!(out.code, 0);
        (out.code, serde_json::from_str(&out.stderr).unwrap())
    }

    #[test]
    fn roots_command() {
        let v = run_ok(&["roots", "--of", "identity", "--a", "0.3", "--b", "2"]);
        assert_eq!(v["family"]["tag"], "general");
        assert_eq!(v["matrix"]["c"], (1.0 - 0.09) / 2.0);
        assert!(v["residual"].as_f64().unwrap() <= 1e-15);
        let v = run_ok(&["roots", "--of", "neg", "--a", "-1", "--b", "0.5"]);
        assert_eq!(v["matrix"]["c"], -4.0);
        let v = run_ok(&["roots", "--family", "lower_c_minus_plus", "--c", "-3"]);
        assert_eq!(v["matrix"], json!({"a": -1.0, "b": 0.0, "c": -3.0, "d": 1.0}));
        let v = run_ok(&["roots", "--count", "5", "--seed", "7"]);
        assert_eq!(v["matrices"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn classify_command() {
        let out = run(["invgeo", "classify", "--alpha", "0", "--beta", "-1"], None);
        assert_eq!(out.stdout, "{\"class\":\"one_sheet\",\"radius_sq\":2.0}\n");
        let v = run_ok(&["classify", "--matrix", r#"{"a":1,"b":4,"c":0,"d":-1}"#]);
        assert_eq!(v["family"]["tag"], "upper_b_plus_minus");
    }

    #[test]
    fn domain_and_usage_errors() {
        let (code, v) = run_err(&["roots", "--a", "1", "--b", "0"]);
        assert_eq!((code, v["error"].as_str().unwrap()), (1, "degenerate_parameter"));
        let (code, v) = run_err(&["classify", "--matrix", r#"{"a":1,"b":2,"c":3,"d":4}"#]);
        assert_eq!((code, v["error"].as_str().unwrap()), (1, "not_an_involution"));
        let (code, v) = run_err(&["decompose", "--matrix", "{not json"]);
        assert_eq!((code, v["error"].as_str().unwrap()), (2, "malformed_input"));
        let (code, v) = run_err(&["frobnicate"]);
        assert_eq!((code, v["error"].as_str().unwrap()), (2, "usage"));
        let (code, _) = run_err(&["classify", "--format", "csv", "--alpha", "0", "--beta", "1"]);
        assert_eq!(code, 2);
        let out = run(["invgeo", "classify", "--alpha", "0", "--beta", "1"], Some("abc"));
        assert_eq!(out.code, 2);
    }

    #[test]
    fn env_tolerance_applies() {
        let m = r#"{"a":1.0,"b":0.0,"c":0.0,"d":-1.000001}"#;
        assert_eq!(run(["invgeo", "classify", "--matrix", m], None).code, 1);
        assert_eq!(run(["invgeo", "classify", "--matrix", m], Some("1e-5")).code, 0);
    }

    #[test]
    fn csv_outputs() {
        let out = run(["invgeo", "sample", "--alpha", "0", "--beta", "-1", "--nu", "2", "--nv", "3", "--format", "csv"], None);
        let lines: Vec<_> = out.stdout.lines().collect();
        assert_eq!(lines[0], POINT_CSV_HEADER);
        assert_eq!(lines.len(), 1 + 6);
        let out = run(
            ["invgeo", "orbit", "--matrix", r#"{"a":0,"b":1,"c":1,"d":0}"#, "--x", "1", "--y", "0", "--steps", "2", "--format", "csv"],
            None,
        );
        assert_eq!(out.stdout, "step,x,y\n0,1.0,0.0\n1,0.0,1.0\n2,1.0,0.0\n");
    }
}
