//! 2×2 real matrices and plane vectors.
//!
//! A matrix `[a, b; c, d]` is stored row-major. The same four numbers are the
//! coordinates `(x1, x2, x3, x4)` of the matrix viewed as a point of R⁴, which
//! is how the quadric module treats it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Comparison thresholds.
///
/// `abs_tol` is the general-purpose residual bound; `exact_tol` is the much
/// tighter band used to decide whether a quantity "is zero" (degenerate
/// parameters, scalar-matrix exclusion, round trips).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub exact_tol: f64,
}

impl Tolerance {
    pub const DEFAULT_ABS: f64 = 1e-9;
    pub const DEFAULT_EXACT: f64 = 1e-12;

    pub fn new(abs_tol: f64, exact_tol: f64) -> Result<Self> {
        let ok = abs_tol.is_finite() && exact_tol.is_finite() && exact_tol > 0.0 && exact_tol <= abs_tol;
        if ok {
            Ok(Self { abs_tol, exact_tol })
        } else {
            Err(Error::InvalidTolerance { abs_tol, exact_tol })
        }
    }

    /// Same `exact_tol` as the default, different `abs_tol`.
    pub fn with_abs(abs_tol: f64) -> Result<Self> {
        Self::new(abs_tol, Self::DEFAULT_EXACT.min(abs_tol))
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs_tol: Self::DEFAULT_ABS, exact_tol: Self::DEFAULT_EXACT }
    }
}

/// A real 2×2 matrix `[a, b; c, d]` with finite entries.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMat2")]
pub struct Mat2 {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMat2 {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl TryFrom<RawMat2> for Mat2 {
    type Error = Error;

    fn try_from(raw: RawMat2) -> Result<Self> {
        Mat2::new(raw.a, raw.b, raw.c, raw.d)
    }
}

impl Mat2 {
    pub const ZERO: Mat2 = Mat2 { a: 0.0, b: 0.0, c: 0.0, d: 0.0 };
    pub const IDENTITY: Mat2 = Mat2 { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };
    pub const NEG_IDENTITY: Mat2 = Mat2 { a: -1.0, b: 0.0, c: 0.0, d: -1.0 };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if [a, b, c, d].iter().all(|v| v.is_finite()) {
            Ok(Self { a, b, c, d })
        } else {
            Err(Error::NonFinite("matrix entry"))
        }
    }

    pub fn from_rows(rows: [[f64; 2]; 2]) -> Result<Self> {
        Self::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    /// Arithmetic results on finite operands; callers guarantee finiteness.
    pub(crate) const fn from_raw(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub fn diag(p: f64, q: f64) -> Result<Self> {
        Self::new(p, 0.0, 0.0, q)
    }

    pub fn scalar(t: f64) -> Result<Self> {
        Self::new(t, 0.0, 0.0, t)
    }

    pub const fn a(&self) -> f64 {
        self.a
    }
    pub const fn b(&self) -> f64 {
        self.b
    }
    pub const fn c(&self) -> f64 {
        self.c
    }
    pub const fn d(&self) -> f64 {
        self.d
    }

    /// Entries as the R⁴ point `(x1, x2, x3, x4)`.
    pub const fn entries(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace_det(&self) -> (f64, f64) {
        (self.trace(), self.det())
    }

    pub fn transpose(&self) -> Self {
        Self::from_raw(self.a, self.c, self.b, self.d)
    }

    pub fn square(&self) -> Self {
        *self * *self
    }

    /// `None` when `|det| <= eps`.
    pub fn inverse(&self, eps: f64) -> Option<Self> {
        let det = self.det();
        if det.abs() <= eps || !det.is_finite() {
            return None;
        }
        let inv = 1.0 / det;
        Some(Self::from_raw(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv))
    }

    pub fn max_norm(&self) -> f64 {
        self.entries().iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// `max |A - B|` over entries.
    pub fn max_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.max_diff(other) <= tol.abs_tol
    }

    pub fn is_symmetric(&self, eps: f64) -> bool {
        (self.b - self.c).abs() <= eps
    }

    /// Distance (max-norm) to the closest scalar matrix `tI`.
    pub fn distance_to_scalar(&self) -> f64 {
        let half_gap = 0.5 * (self.a - self.d).abs();
        half_gap.max(self.b.abs()).max(self.c.abs())
    }

    pub fn mul_vec(&self, v: Vec2) -> Vec2 {
        Vec2::from_raw(self.a * v.x() + self.b * v.y(), self.c * v.x() + self.d * v.y())
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::from_raw(k * self.a, k * self.b, k * self.c, k * self.d)
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|v| v.is_finite())
    }
}

/// Standard matrix product `A · B`.
pub fn mat_mul(lhs: Mat2, rhs: Mat2) -> Mat2 {
    lhs * rhs
}

pub fn trace_det(m: Mat2) -> (f64, f64) {
    m.trace_det()
}

pub fn approx_eq(lhs: Mat2, rhs: Mat2, tol: Tolerance) -> bool {
    lhs.approx_eq(&rhs, tol)
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, r: Mat2) -> Mat2 {
        Mat2::from_raw(self.a * r.a + self.b * r.c, self.a * r.b + self.b * r.d, self.c * r.a + self.d * r.c, self.c * r.b + self.d * r.d)
    }
}

impl Mul<Vec2> for Mat2 {
    type Output = Vec2;

    fn mul(self, v: Vec2) -> Vec2 {
        self.mul_vec(v)
    }
}

impl Mul<Mat2> for f64 {
    type Output = Mat2;

    fn mul(self, m: Mat2) -> Mat2 {
        m.scale(self)
    }
}

impl Add for Mat2 {
    type Output = Mat2;

    fn add(self, r: Mat2) -> Mat2 {
        Mat2::from_raw(self.a + r.a, self.b + r.b, self.c + r.c, self.d + r.d)
    }
}

impl Sub for Mat2 {
    type Output = Mat2;

    fn sub(self, r: Mat2) -> Mat2 {
        Mat2::from_raw(self.a - r.a, self.b - r.b, self.c - r.c, self.d - r.d)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        Mat2::from_raw(-self.a, -self.b, -self.c, -self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}; {:?}, {:?}]", self.a, self.b, self.c, self.d)
    }
}

/// Plain decimals for ordinary magnitudes, exponent form for tiny or huge ones.
struct Entry(f64);

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0;
        if v == 0.0 {
            write!(f, "0")
        } else if (1e-4..1e16).contains(&v.abs()) {
            write!(f, "{v}")
        } else {
            write!(f, "{v:e}")
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}; {}, {}]", Entry(self.a), Entry(self.b), Entry(self.c), Entry(self.d))
    }
}

/// A point (or column vector) of the plane.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawVec2")]
pub struct Vec2 {
    x: f64,
    y: f64,
}

#[derive(Deserialize)]
struct RawVec2 {
    x: f64,
    y: f64,
}

impl TryFrom<RawVec2> for Vec2 {
    type Error = Error;

    fn try_from(raw: RawVec2) -> Result<Self> {
        Vec2::new(raw.x, raw.y)
    }
}

impl Vec2 {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::NonFinite("vector entry"))
        }
    }

    pub(crate) const fn from_raw(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub const fn x(&self) -> f64 {
        self.x
    }
    pub const fn y(&self) -> f64 {
        self.y
    }

    pub fn dot(&self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn max_diff(&self, other: Vec2) -> f64 {
        (self.x - other.x).abs().max((self.y - other.y).abs())
    }
}

impl Neg for Vec2 {
    type Output = Vec2;

    fn neg(self) -> Vec2 {
        Vec2::from_raw(-self.x, -self.y)
    }
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}
