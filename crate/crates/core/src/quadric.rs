//! The locus `S(α, β)` of non-scalar 2×2 matrices with trace `α` and
//! determinant `β`, seen as a quadric surface in the 3-dimensional hyperplane
//! `P(α) = {X : tr X = α}` of R⁴.
//!
//! Coordinates inside `P(α)` are taken in the Bell frame: origin
//! `(α/2, 0, 0, α/2)` and orthonormal axes
//!
//! ```text
//! e_x = ( 1/√2,    0,    0, -1/√2)
//! e_y = (    0, 1/√2, 1/√2,     0)
//! e_z = (    0,-1/√2, 1/√2,     0)
//! ```
//!
//! so `x1 = α/2 + x/√2`, `x2 = (y - z)/√2`, `x3 = (y + z)/√2`,
//! `x4 = α/2 - x/√2`. In these coordinates `det X = β` becomes
//! `x² + y² - z² = α²/2 - 2β`, which is a one-sheet hyperboloid, a right
//! circular cone or a two-sheet hyperboloid according to the sign of
//! `α² - 4β`.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Tolerance};
use crate::roots::involution_residual;

/// Half-extent of the hyperbolic parameter used by [`sample_surface`].
pub const SAMPLE_HYPERBOLIC_EXTENT: f64 = 1.5;
/// Largest cone radius emitted by [`sample_surface`].
pub const SAMPLE_CONE_RADIUS: f64 = 2.0;

/// Target trace `alpha` and determinant `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocusParams {
    pub alpha: f64,
    pub beta: f64,
}

impl LocusParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if alpha.is_finite() && beta.is_finite() {
            Ok(Self { alpha, beta })
        } else {
            Err(Error::NonFinite("locus parameter"))
        }
    }

    pub fn discriminant(&self) -> f64 {
        self.alpha * self.alpha - 4.0 * self.beta
    }

    /// Right-hand side of `x² + y² - z² = α²/2 - 2β`.
    pub fn radius_sq(&self) -> f64 {
        0.5 * self.alpha * self.alpha - 2.0 * self.beta
    }
}

/// Bell coordinates `(x, y, z)` of a point of the hyperplane `P(alpha)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BellPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    #[serde(rename = "one_sheet")]
    OneSheetHyperboloid,
    #[serde(rename = "cone")]
    RightCircularCone,
    #[serde(rename = "two_sheet")]
    TwoSheetHyperboloid,
}

impl SurfaceKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SurfaceKind::OneSheetHyperboloid => "one_sheet",
            SurfaceKind::RightCircularCone => "cone",
            SurfaceKind::TwoSheetHyperboloid => "two_sheet",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceClass {
    #[serde(rename = "class")]
    pub kind: SurfaceKind,
    pub radius_sq: f64,
}

/// Direction matrices of the two rulings through a point `A` of `S(0,-1)`.
///
/// `AU = U`, `UA = -U`, `U² = 0` and `AV = -V`, `VA = V`, `V² = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeneratorPair {
    pub u: Mat2,
    pub v: Mat2,
}

/// Largest violation of the six ruling identities.
pub fn generator_identity_residual(a: &Mat2, pair: &GeneratorPair) -> f64 {
    let (u, v) = (pair.u, pair.v);
    [
        (*a * u).max_diff(&u),
        (u * *a).max_diff(&-u),
        u.square().max_norm(),
        (*a * v).max_diff(&-v),
        (v * *a).max_diff(&v),
        v.square().max_norm(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// The three Bell axes as vectors of R⁴.
pub fn bell_basis() -> [[f64; 4]; 3] {
    let h = FRAC_1_SQRT_2;
    [[h, 0.0, 0.0, -h], [0.0, h, h, 0.0], [0.0, -h, h, 0.0]]
}

/// Membership in `S(α, β)`: trace and determinant match within `abs_tol`
/// and `X` is not a scalar matrix (distance to `tI` above `exact_tol`).
pub fn in_locus(x: &Mat2, p: LocusParams, tol: Tolerance) -> bool {
    let (t, d) = x.trace_det();
    (t - p.alpha).abs() <= tol.abs_tol && (d - p.beta).abs() <= tol.abs_tol && x.distance_to_scalar() >= tol.exact_tol
}

pub fn classify_quadric(p: LocusParams) -> SurfaceClass {
    let disc = p.discriminant();
    let kind = if disc.abs() <= Tolerance::DEFAULT_EXACT {
        SurfaceKind::RightCircularCone
    } else if disc > 0.0 {
        SurfaceKind::OneSheetHyperboloid
    } else {
        SurfaceKind::TwoSheetHyperboloid
    };
    SurfaceClass { kind, radius_sq: p.radius_sq() }
}

pub fn to_bell(x: &Mat2, alpha: f64, tol: Tolerance) -> Result<BellPoint> {
    let trace = x.trace();
    if (trace - alpha).abs() > tol.abs_tol {
        return Err(Error::NotInHyperplane { trace, alpha });
    }
    let [x1, x2, x3, _] = x.entries();
    Ok(BellPoint { x: SQRT_2 * (x1 - 0.5 * alpha), y: (x2 + x3) * FRAC_1_SQRT_2, z: (x3 - x2) * FRAC_1_SQRT_2, alpha })
}

pub fn from_bell(p: BellPoint) -> Result<Mat2> {
    let half = 0.5 * p.alpha;
    let sx = p.x * FRAC_1_SQRT_2;
    Mat2::new(half + sx, (p.y - p.z) * FRAC_1_SQRT_2, (p.y + p.z) * FRAC_1_SQRT_2, half - sx)
}

/// `x² + y² - z² - (α²/2 - 2β)`.
pub fn quadric_residual(p: BellPoint, lp: LocusParams) -> Result<f64> {
    if (p.alpha - lp.alpha).abs() > Tolerance::DEFAULT_EXACT {
        return Err(Error::AlphaMismatch { point: p.alpha, locus: lp.alpha });
    }
    Ok(p.x * p.x + p.y * p.y - p.z * p.z - lp.radius_sq())
}

/// The symmetric involution `[cos φ, sin φ; sin φ, -cos φ]`, a point of the
/// principal section `z = 0` of `S(0,-1)`.
pub fn principal_section_point(phi: f64) -> Result<Mat2> {
    let (s, c) = phi.sin_cos();
    Mat2::new(c, s, s, -c)
}

/// The skew-symmetric matrix `[0, s; -s, 0]` on the principal axis `x = y = 0`.
pub fn principal_axis_point(s: f64) -> Result<Mat2> {
    Mat2::new(0.0, s, -s, 0.0)
}

/// Membership in the asymptotic cone `x² + y² - z² = 0` of `S(0,-1)`.
///
/// With trace zero, `x² + y² - z² = 2(x1² + x2·x3) = -2 det X`, so the cone is
/// the set of trace-zero matrices with `x1² + x2·x3 = 0`: the nilpotent matrices.
pub fn on_asymptotic_cone(x: &Mat2, tol: Tolerance) -> bool {
    let [x1, x2, x3, _] = x.entries();
    x.trace().abs() <= tol.abs_tol && (x1 * x1 + x2 * x3).abs() <= tol.abs_tol
}

fn on_involution_surface(a: &Mat2, tol: Tolerance) -> bool {
    a.trace().abs() <= tol.abs_tol && involution_residual(a) <= tol.abs_tol && a.distance_to_scalar() >= tol.exact_tol
}

/// The two families of rulings on `S(0,-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ruling {
    /// Directions `U` with `AU = U`, `UA = -U`.
    First,
    /// Directions `V` with `AV = -V`, `VA = V`.
    Second,
}

/// One ruling direction through `A ∈ S(0,-1)`: `(A + I)X(A - I)` for the
/// first family, `(A - I)X(A + I)` for the second, rescaled to unit max-norm.
///
/// Fails with `DegenerateSeed` when the product vanishes relative to
/// `‖A + I‖·‖X‖·‖A - I‖`; retry with another seed.
pub fn ruling_direction(a: &Mat2, seed: &Mat2, ruling: Ruling, tol: Tolerance) -> Result<Mat2> {
    if !on_involution_surface(a, tol) {
        return Err(Error::NotOnSurface);
    }
    let plus = *a + Mat2::IDENTITY;
    let minus = *a - Mat2::IDENTITY;
    let d = match ruling {
        Ruling::First => plus * *seed * minus,
        Ruling::Second => minus * *seed * plus,
    };
    let scale = plus.max_norm() * seed.max_norm() * minus.max_norm();
    let norm = d.max_norm();
    if scale.is_nan() || scale <= 0.0 || norm <= scale * 1e-8 {
        return Err(Error::DegenerateSeed);
    }
    Ok(d.scale(1.0 / norm))
}

/// Both ruling directions through `A` from the same seed.
pub fn generator_directions(a: &Mat2, seed: &Mat2, tol: Tolerance) -> Result<GeneratorPair> {
    Ok(GeneratorPair { u: ruling_direction(a, seed, Ruling::First, tol)?, v: ruling_direction(a, seed, Ruling::Second, tol)? })
}

/// `A + tD`: a point on the ruling through `A` with direction `D`.
pub fn generator_point(a: &Mat2, direction: &Mat2, t: f64) -> Mat2 {
    *a + direction.scale(t)
}

/// What a sampled point represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointTag {
    /// A point of the surface `S(α, β)`.
    Surface,
    /// The cone vertex `αI/2`, which is a scalar matrix and therefore not in `S(α, β)`.
    Vertex,
    /// A point on a ruling line.
    Generator,
}

impl PointTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            PointTag::Surface => "surface",
            PointTag::Vertex => "vertex",
            PointTag::Generator => "generator",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfacePoint {
    pub bell: BellPoint,
    pub matrix: Mat2,
    pub tag: PointTag,
}

impl SurfacePoint {
    pub fn from_bell(bell: BellPoint, tag: PointTag) -> Result<Self> {
        Ok(Self { bell, matrix: from_bell(bell)?, tag })
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = if n > 1 { (hi - lo) / (n - 1) as f64 } else { 0.0 };
    let mid = 0.5 * (lo + hi);
    (0..n).map(move |i| if n == 1 { mid } else { lo + step * i as f64 })
}

fn azimuths(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |j| TAU * j as f64 / n as f64)
}

/// A grid over the surface `S(α, β)` in Bell coordinates.
///
/// * one sheet (`ρ² > 0`): `(ρ cosh u cos v, ρ cosh u sin v, ρ sinh u)`, `n_u`
///   values of `u` in `[-1.5, 1.5]` times `n_v` azimuths — `n_u·n_v` points;
/// * two sheets (`ρ² < 0`): `(ρ sinh u cos v, ρ sinh u sin v, ±ρ cosh u)`,
///   `u` in `[0, 1.5]`, both sheets — `2·n_u·n_v` points;
/// * cone: the vertex (tagged [`PointTag::Vertex`]) followed by
///   `(r cos v, r sin v, ±r)` for `n_u` radii in `(0, 2]` on both nappes —
///   `1 + 2·n_u·n_v` points.
pub fn sample_surface(p: LocusParams, n_u: usize, n_v: usize) -> Result<Vec<SurfacePoint>> {
    if n_u == 0 || n_v == 0 {
        return Err(Error::InvalidCount);
    }
    let class = classify_quadric(p);
    let rho = class.radius_sq.abs().sqrt();
    let alpha = p.alpha;
    let at = |x: f64, y: f64, z: f64, tag| SurfacePoint::from_bell(BellPoint { x, y, z, alpha }, tag);
    let mut out = Vec::new();
    match class.kind {
        SurfaceKind::OneSheetHyperboloid => {
            let ext = SAMPLE_HYPERBOLIC_EXTENT;
            for u in linspace(-ext, ext, n_u) {
                for v in azimuths(n_v) {
                    let (sv, cv) = v.sin_cos();
                    out.push(at(rho * u.cosh() * cv, rho * u.cosh() * sv, rho * u.sinh(), PointTag::Surface)?);
                }
            }
        }
        SurfaceKind::TwoSheetHyperboloid => {
            for sheet in [1.0, -1.0] {
                for u in linspace(0.0, SAMPLE_HYPERBOLIC_EXTENT, n_u) {
                    for v in azimuths(n_v) {
                        let (sv, cv) = v.sin_cos();
                        out.push(at(rho * u.sinh() * cv, rho * u.sinh() * sv, sheet * rho * u.cosh(), PointTag::Surface)?);
                    }
                }
            }
        }
        SurfaceKind::RightCircularCone => {
            out.push(at(0.0, 0.0, 0.0, PointTag::Vertex)?);
            for nappe in [1.0, -1.0] {
                for k in 1..=n_u {
                    let r = SAMPLE_CONE_RADIUS * k as f64 / n_u as f64;
                    for v in azimuths(n_v) {
                        let (sv, cv) = v.sin_cos();
                        out.push(at(r * cv, r * sv, nappe * r, PointTag::Surface)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Points `A + tD` for `steps + 1` evenly spaced `t` in `[t_min, t_max]`,
/// tagged [`PointTag::Generator`] and expressed in the Bell frame of `P(0)`.
pub fn sample_ruling(a: &Mat2, direction: &Mat2, t_min: f64, t_max: f64, steps: usize, tol: Tolerance) -> Result<Vec<SurfacePoint>> {
    if steps == 0 {
        return Err(Error::InvalidCount);
    }
    linspace(t_min, t_max, steps + 1)
        .map(|t| {
            let m = generator_point(a, direction, t);
            Ok(SurfacePoint { bell: to_bell(&m, 0.0, tol)?, matrix: m, tag: PointTag::Generator })
        })
        .collect()
}
