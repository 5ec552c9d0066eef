//! Split-quaternions (coquaternions) `w + xi + yj + zk` with
//! `i² = -1`, `j² = k² = ijk = 1`, and their ring isomorphism with real 2×2
//! matrices:
//!
//! ```text
//! w + xi + yj + zk  ↦  [w + z, x + y; y - x, w - z]
//! ```
//!
//! Under this map `qq* = w² + x² - y² - z²` is the determinant, so square
//! roots of `1` and `-1` correspond to square roots of `I₂` and `-I₂`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::householder::householder_from_angle;
use crate::mat2::{Mat2, Tolerance};

#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawQuat")]
pub struct SplitQuat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuat {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl TryFrom<RawQuat> for SplitQuat {
    type Error = Error;

    fn try_from(r: RawQuat) -> Result<Self> {
        SplitQuat::new(r.w, r.x, r.y, r.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CausalClass {
    Spacelike,
    Lightlike,
    Timelike,
}

impl SplitQuat {
    pub const ONE: SplitQuat = SplitQuat { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: SplitQuat = SplitQuat { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: SplitQuat = SplitQuat { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: SplitQuat = SplitQuat { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };
    pub const ZERO: SplitQuat = SplitQuat { w: 0.0, x: 0.0, y: 0.0, z: 0.0 };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        if [w, x, y, z].iter().all(|v| v.is_finite()) {
            Ok(Self { w, x, y, z })
        } else {
            Err(Error::NonFinite("split-quaternion coefficient"))
        }
    }

    pub fn scalar(w: f64) -> Self {
        Self { w, ..Self::ZERO }
    }

    pub fn conj(&self) -> Self {
        Self { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    /// `qq* = w² + x² - y² - z²`
    pub fn modulus(&self) -> f64 {
        self.w * self.w + self.x * self.x - self.y * self.y - self.z * self.z
    }

    /// Sign of the modulus, with `|qq*| <= exact_tol` counted as lightlike.
    pub fn classify(&self, tol: Tolerance) -> CausalClass {
        let n = self.modulus();
        if n.abs() <= tol.exact_tol {
            CausalClass::Lightlike
        } else if n < 0.0 {
            CausalClass::Spacelike
        } else {
            CausalClass::Timelike
        }
    }

    /// `q* / qq*`
    pub fn inverse(&self, tol: Tolerance) -> Result<Self> {
        let n = self.modulus();
        if n.abs() <= tol.exact_tol {
            return Err(Error::NotInvertible);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    pub fn scale(&self, k: f64) -> Self {
        Self { w: k * self.w, x: k * self.x, y: k * self.y, z: k * self.z }
    }

    pub fn max_diff(&self, other: &Self) -> f64 {
        let d = *self - *other;
        d.w.abs().max(d.x.abs()).max(d.y.abs()).max(d.z.abs())
    }

    pub fn to_matrix(&self) -> Mat2 {
        Mat2::from_raw(self.w + self.z, self.x + self.y, self.y - self.x, self.w - self.z)
    }

    pub fn from_matrix(m: &Mat2) -> Self {
        let [a, b, c, d] = m.entries();
        Self { w: 0.5 * (a + d), x: 0.5 * (b - c), y: 0.5 * (b + c), z: 0.5 * (a - d) }
    }
}

pub fn sq_mul(p: SplitQuat, q: SplitQuat) -> SplitQuat {
    p * q
}

pub fn sq_conj(q: SplitQuat) -> SplitQuat {
    q.conj()
}

pub fn sq_modulus(q: SplitQuat) -> f64 {
    q.modulus()
}

pub fn sq_classify(q: SplitQuat, tol: Tolerance) -> CausalClass {
    q.classify(tol)
}

pub fn sq_inverse(q: SplitQuat, tol: Tolerance) -> Result<SplitQuat> {
    q.inverse(tol)
}

pub fn to_matrix(q: SplitQuat) -> Mat2 {
    q.to_matrix()
}

pub fn from_matrix(m: &Mat2) -> SplitQuat {
    SplitQuat::from_matrix(m)
}

impl Mul for SplitQuat {
    type Output = SplitQuat;

    // ij = k, jk = -i, ki = j, i² = -1, j² = k² = 1
    fn mul(self, q: SplitQuat) -> SplitQuat {
        let p = self;
        SplitQuat {
            w: p.w * q.w - p.x * q.x + p.y * q.y + p.z * q.z,
            x: p.w * q.x + p.x * q.w - p.y * q.z + p.z * q.y,
            y: p.w * q.y + p.y * q.w - p.x * q.z + p.z * q.x,
            z: p.w * q.z + p.z * q.w + p.x * q.y - p.y * q.x,
        }
    }
}

impl Add for SplitQuat {
    type Output = SplitQuat;

    fn add(self, q: SplitQuat) -> SplitQuat {
        SplitQuat { w: self.w + q.w, x: self.x + q.x, y: self.y + q.y, z: self.z + q.z }
    }
}

impl Sub for SplitQuat {
    type Output = SplitQuat;

    fn sub(self, q: SplitQuat) -> SplitQuat {
        SplitQuat { w: self.w - q.w, x: self.x - q.x, y: self.y - q.y, z: self.z - q.z }
    }
}

impl Neg for SplitQuat {
    type Output = SplitQuat;

    fn neg(self) -> SplitQuat {
        self.scale(-1.0)
    }
}

impl fmt::Debug for SplitQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + {:?}i + {:?}j + {:?}k", self.w, self.x, self.y, self.z)
    }
}

/// Largest `|cos t|` treated as zero by the `-1` parametrization.
fn check_cos(t: f64) -> Result<f64> {
    let c = t.cos();
    if c.abs() <= Tolerance::DEFAULT_EXACT {
        return Err(Error::SingularParameter(t));
    }
    Ok(c)
}

/// `i sinh t + (j sin φ + k cos φ) cosh t`, a square root of `1` other than `±1`.
///
/// Its vector part lies on `x² - y² - z² = -1`.
pub fn unit_root_identity(t: f64, phi: f64) -> SplitQuat {
    let (s, c) = phi.sin_cos();
    SplitQuat { w: 0.0, x: t.sinh(), y: t.cosh() * s, z: t.cosh() * c }
}

/// `i sec t + j tan t sin φ + k tan t cos φ`, a square root of `-1`.
///
/// Its vector part lies on `x² - y² - z² = 1`; the sign of `sec t` selects
/// the sheet. Singular where `cos t = 0`.
pub fn unit_root_neg(t: f64, phi: f64) -> Result<SplitQuat> {
    let cos_t = check_cos(t)?;
    let sec = 1.0 / cos_t;
    let tan = t.sin() * sec;
    let (s, c) = phi.sin_cos();
    Ok(SplitQuat { w: 0.0, x: sec, y: tan * s, z: tan * c })
}

/// `[cosh t cos φ, cosh t sin φ + sinh t; cosh t sin φ - sinh t, -cosh t cos φ]`
pub fn root_matrix_identity(t: f64, phi: f64) -> Result<Mat2> {
    let (s, c) = phi.sin_cos();
    let (ch, sh) = (t.cosh(), t.sinh());
    Mat2::new(ch * c, ch * s + sh, ch * s - sh, -ch * c)
}

/// `[tan t cos φ, tan t sin φ + sec t; tan t sin φ - sec t, -tan t cos φ]`
pub fn root_matrix_neg(t: f64, phi: f64) -> Result<Mat2> {
    let cos_t = check_cos(t)?;
    let sec = 1.0 / cos_t;
    let tan = t.sin() * sec;
    let (s, c) = phi.sin_cos();
    Mat2::new(tan * c, tan * s + sec, tan * s - sec, -tan * c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootTarget {
    /// Square roots of `I₂`.
    Identity,
    /// Square roots of `-I₂`.
    Neg,
}

/// `coef_h · H(φ) + coef_j · J` with `J = [0, 1; -1, 0]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootDecomposition {
    pub coef_h: f64,
    pub h: Mat2,
    pub coef_j: f64,
    pub j: Mat2,
}

impl RootDecomposition {
    pub fn recompose(&self) -> Mat2 {
        self.h.scale(self.coef_h) + self.j.scale(self.coef_j)
    }
}

/// `J = [0, 1; -1, 0]`
pub const QUARTER_TURN: Mat2 = Mat2::from_raw(0.0, 1.0, -1.0, 0.0);

/// Splits a parametrized root into a multiple of a Householder reflection and
/// a multiple of `J`: `cosh t·H(φ) + sinh t·J` for roots of `I₂`,
/// `tan t·H(φ) + sec t·J` for roots of `-I₂`.
pub fn decompose_root(t: f64, phi: f64, which: RootTarget) -> Result<RootDecomposition> {
    let h = householder_from_angle(phi)?;
    let (coef_h, coef_j) = match which {
        RootTarget::Identity => (t.cosh(), t.sinh()),
        RootTarget::Neg => {
            let sec = 1.0 / check_cos(t)?;
            (t.sin() * sec, sec)
        }
    };
    Ok(RootDecomposition { coef_h, h, coef_j, j: QUARTER_TURN })
}
