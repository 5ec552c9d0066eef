//! Real square roots of `I₂` and `-I₂`.
//!
//! Writing `R = [a, b; c, d]`, the condition `R² = I₂` splits into three
//! families:
//!
//! * `a + d ≠ 0`: only `R = ±I₂`;
//! * `a + d = 0` and `a² = 1`: the triangular roots `[±1, b; 0, ∓1]` and
//!   `[±1, 0; c, ∓1]`;
//! * `a + d = 0` and `a² ≠ 1`: the two-parameter family
//!   `[a, b; (1 - a²)/b, -a]` with `b ≠ 0`.
//!
//! The real square roots of `-I₂` form the single family
//! `[a, b; -(1 + a²)/b, -a]`, `b ≠ 0`. (Complex roots such as `±iI₂` exist but
//! are outside this real-arithmetic crate.)

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Tolerance};

/// Smallest `|b|` drawn by [`sample_involutions`].
pub const SAMPLER_MIN_B: f64 = 1e-3;

/// Which family a square root of `I₂` belongs to, with the parameters needed
/// to rebuild it.
///
/// Serialized as `{"tag": "...", "params": {...}}`, where `params` carries
/// only the slots the tag uses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "FamilyJson", try_from = "FamilyJson")]
pub enum RootFamily {
    /// `I₂`
    Identity,
    /// `-I₂`
    NegIdentity,
    /// `[1, b; 0, -1]`
    UpperBPlusMinus { b: f64 },
    /// `[-1, b; 0, 1]`
    UpperBMinusPlus { b: f64 },
    /// `[1, 0; c, -1]`
    LowerCPlusMinus { c: f64 },
    /// `[-1, 0; c, 1]`
    LowerCMinusPlus { c: f64 },
    /// `[a, b; (1 - a²)/b, -a]`, `b ≠ 0`
    General { a: f64, b: f64 },
}

impl RootFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            RootFamily::Identity => "identity",
            RootFamily::NegIdentity => "neg_identity",
            RootFamily::UpperBPlusMinus { .. } => "upper_b_plus_minus",
            RootFamily::UpperBMinusPlus { .. } => "upper_b_minus_plus",
            RootFamily::LowerCPlusMinus { .. } => "lower_c_plus_minus",
            RootFamily::LowerCMinusPlus { .. } => "lower_c_minus_plus",
            RootFamily::General { .. } => "general",
        }
    }

    /// The matrix this family member denotes.
    pub fn to_matrix(&self) -> Result<Mat2> {
        match *self {
            RootFamily::General { a, b } => make_general_root(a, b),
            other => make_case_root(other),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    tag: String,
    params: BTreeMap<String, f64>,
}

impl From<RootFamily> for FamilyJson {
    fn from(f: RootFamily) -> Self {
        let params: &[(&str, f64)] = match f {
            RootFamily::Identity | RootFamily::NegIdentity => &[],
            RootFamily::UpperBPlusMinus { b } | RootFamily::UpperBMinusPlus { b } => &[("b", b)],
            RootFamily::LowerCPlusMinus { c } | RootFamily::LowerCMinusPlus { c } => &[("c", c)],
            RootFamily::General { a, b } => &[("a", a), ("b", b)],
        };
        FamilyJson { tag: f.tag().to_owned(), params: params.iter().map(|(k, v)| ((*k).to_owned(), *v)).collect() }
    }
}

impl TryFrom<FamilyJson> for RootFamily {
    type Error = String;

    fn try_from(j: FamilyJson) -> std::result::Result<Self, String> {
        let get = |k: &str| j.params.get(k).copied().ok_or_else(|| format!("missing parameter `{k}` for tag `{}`", j.tag));
        Ok(match j.tag.as_str() {
            "identity" => RootFamily::Identity,
            "neg_identity" => RootFamily::NegIdentity,
            "upper_b_plus_minus" => RootFamily::UpperBPlusMinus { b: get("b")? },
            "upper_b_minus_plus" => RootFamily::UpperBMinusPlus { b: get("b")? },
            "lower_c_plus_minus" => RootFamily::LowerCPlusMinus { c: get("c")? },
            "lower_c_minus_plus" => RootFamily::LowerCMinusPlus { c: get("c")? },
            "general" => RootFamily::General { a: get("a")?, b: get("b")? },
            other => return Err(format!("unknown root family `{other}`")),
        })
    }
}

/// Parameters of a real square root of `-I₂`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SkewRootParams {
    pub a: f64,
    pub b: f64,
}

fn check_b(b: f64) -> Result<()> {
    if !b.is_finite() {
        return Err(Error::NonFinite("parameter b"));
    }
    if b.abs() <= Tolerance::DEFAULT_EXACT {
        return Err(Error::DegenerateParameter { name: "b", value: b });
    }
    Ok(())
}

/// `[a, b; (1 - a²)/b, -a]`, the general square root of `I₂`.
pub fn make_general_root(a: f64, b: f64) -> Result<Mat2> {
    check_b(b)?;
    Mat2::new(a, b, (1.0 - a * a) / b, -a)
}

/// The triangular and scalar roots; `General` is rejected.
pub fn make_case_root(family: RootFamily) -> Result<Mat2> {
    match family {
        RootFamily::Identity => Ok(Mat2::IDENTITY),
        RootFamily::NegIdentity => Ok(Mat2::NEG_IDENTITY),
        RootFamily::UpperBPlusMinus { b } => Mat2::new(1.0, b, 0.0, -1.0),
        RootFamily::UpperBMinusPlus { b } => Mat2::new(-1.0, b, 0.0, 1.0),
        RootFamily::LowerCPlusMinus { c } => Mat2::new(1.0, 0.0, c, -1.0),
        RootFamily::LowerCMinusPlus { c } => Mat2::new(-1.0, 0.0, c, 1.0),
        RootFamily::General { .. } => Err(Error::WrongConstructor),
    }
}

/// `[a, b; -(1 + a²)/b, -a]`, the general real square root of `-I₂`.
pub fn make_skew_root(p: SkewRootParams) -> Result<Mat2> {
    check_b(p.b)?;
    Mat2::new(p.a, p.b, -(1.0 + p.a * p.a) / p.b, -p.a)
}

/// `‖R² - I₂‖∞`
pub fn involution_residual(r: &Mat2) -> f64 {
    r.square().max_diff(&Mat2::IDENTITY)
}

/// `‖R² + I₂‖∞`
pub fn skew_involution_residual(r: &Mat2) -> f64 {
    r.square().max_diff(&Mat2::NEG_IDENTITY)
}

pub fn is_involution(r: &Mat2, tol: Tolerance) -> bool {
    involution_residual(r) <= tol.abs_tol
}

pub fn is_skew_involution(r: &Mat2, tol: Tolerance) -> bool {
    skew_involution_residual(r) <= tol.abs_tol
}

/// Recovers the family of a square root of `I₂`.
///
/// The trace is tested first (an involution has trace `-2`, `0` or `2`), then
/// `b ≈ 0` and `c ≈ 0` within `exact_tol`, otherwise the root is `General`.
/// `diag(±1, ∓1)` has `b = c = 0` and is reported as an upper-triangular root
/// with `b = 0`.
pub fn classify_involution(r: &Mat2, tol: Tolerance) -> Result<RootFamily> {
    let residual = involution_residual(r);
    if residual > tol.abs_tol {
        return Err(Error::NotAnInvolution { residual });
    }
    let trace = r.trace();
    if trace.abs() > 1.0 {
        return Ok(if trace > 0.0 { RootFamily::Identity } else { RootFamily::NegIdentity });
    }
    let plus_minus = r.a() > 0.0;
    if r.c().abs() <= tol.exact_tol {
        let b = r.b();
        return Ok(if plus_minus { RootFamily::UpperBPlusMinus { b } } else { RootFamily::UpperBMinusPlus { b } });
    }
    if r.b().abs() <= tol.exact_tol {
        let c = r.c();
        return Ok(if plus_minus { RootFamily::LowerCPlusMinus { c } } else { RootFamily::LowerCMinusPlus { c } });
    }
    Ok(RootFamily::General { a: r.a(), b: r.b() })
}

/// `n` seeded involutions from the general family with `(a, b)` uniform on
/// `[-range, range]²` and `|b| >= 1e-3`.
pub fn sample_involutions(n: usize, seed: u64, param_range: f64) -> Result<Vec<Mat2>> {
    sample_params(n, seed, param_range)?.into_iter().map(|(a, b)| make_general_root(a, b)).collect()
}

/// Same draws as [`sample_involutions`], mapped through [`make_skew_root`].
pub fn sample_skew_involutions(n: usize, seed: u64, param_range: f64) -> Result<Vec<Mat2>> {
    sample_params(n, seed, param_range)?.into_iter().map(|(a, b)| make_skew_root(SkewRootParams { a, b })).collect()
}

/// The raw `(a, b)` draws behind the samplers.
pub fn sample_params(n: usize, seed: u64, param_range: f64) -> Result<Vec<(f64, f64)>> {
    if n == 0 {
        return Err(Error::InvalidCount);
    }
    if !param_range.is_finite() || param_range <= SAMPLER_MIN_B {
        return Err(Error::InvalidRange(param_range));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n)
        .map(|_| {
            let a = rng.random_range(-param_range..=param_range);
            let b = loop {
                let b = rng.random_range(-param_range..=param_range);
                if b.abs() >= SAMPLER_MIN_B {
                    break b;
                }
            };
            (a, b)
        })
        .collect())
}
