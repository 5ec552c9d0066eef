//! Order-2 Householder reflections `P = I - 2vvᵀ`.
//!
//! For `v = (-sin(φ/2), cos(φ/2))` the reflection is
//! `H(φ) = [cos φ, sin φ; sin φ, -cos φ]`, and these are exactly the symmetric
//! square roots of `I₂` other than `±I₂`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Tolerance, Vec2};
use crate::roots::involution_residual;

/// Inputs whose norm is within this distance of 1 are renormalized.
pub const UNIT_NORM_SLACK: f64 = 1e-6;

/// A unit vector of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawUnit")]
pub struct UnitVec2 {
    v1: f64,
    v2: f64,
}

#[derive(Deserialize)]
struct RawUnit {
    v1: f64,
    v2: f64,
}

impl TryFrom<RawUnit> for UnitVec2 {
    type Error = Error;

    fn try_from(r: RawUnit) -> Result<Self> {
        UnitVec2::new(r.v1, r.v2)
    }
}

impl UnitVec2 {
    pub fn new(v1: f64, v2: f64) -> Result<Self> {
        if !(v1.is_finite() && v2.is_finite()) {
            return Err(Error::NonFinite("unit vector"));
        }
        let norm = v1.hypot(v2);
        if (norm - 1.0).abs() >= UNIT_NORM_SLACK {
            return Err(Error::NotUnitVector(norm));
        }
        Ok(Self { v1: v1 / norm, v2: v2 / norm })
    }

    /// The normal `(-sin(φ/2), cos(φ/2))` of the mirror of `H(φ)`.
    pub fn mirror_normal(phi: f64) -> Self {
        let (s, c) = (0.5 * phi).sin_cos();
        Self { v1: -s, v2: c }
    }

    pub fn v1(&self) -> f64 {
        self.v1
    }
    pub fn v2(&self) -> f64 {
        self.v2
    }

    pub fn to_vec2(&self) -> Vec2 {
        Vec2::from_raw(self.v1, self.v2)
    }

    /// Rotated a quarter turn counter-clockwise.
    pub fn perp(&self) -> Vec2 {
        Vec2::from_raw(-self.v2, self.v1)
    }
}

pub fn householder_from_unit(v: UnitVec2) -> Mat2 {
    let (p, q) = (v.v1, v.v2);
    Mat2::from_raw(1.0 - 2.0 * p * p, -2.0 * p * q, -2.0 * p * q, 1.0 - 2.0 * q * q)
}

/// `[cos φ, sin φ; sin φ, -cos φ]`
pub fn householder_from_angle(phi: f64) -> Result<Mat2> {
    let (s, c) = phi.sin_cos();
    Mat2::new(c, s, s, -c)
}

/// `(1/t)·[r, s; s, -r]`, a rational symmetric involution.
pub fn pythagorean_root(r: i64, s: i64, t: i64) -> Result<Mat2> {
    Ok(PythagoreanRoot::new(r, s, t)?.to_mat2())
}

/// Exact integer form `(1/t)·[r, s; s, -r]` of a Pythagorean-triple root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PythagoreanRoot {
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

impl PythagoreanRoot {
    pub fn new(r: i64, s: i64, t: i64) -> Result<Self> {
        let (r2, s2, t2) = (r as i128 * r as i128, s as i128 * s as i128, t as i128 * t as i128);
        if t == 0 || r2 + s2 != t2 {
            return Err(Error::NotPythagorean { r, s, t });
        }
        Ok(Self { r, s, t })
    }

    /// Numerator matrix `[r, s; s, -r]`.
    pub fn numerator(&self) -> [[i128; 2]; 2] {
        let (r, s) = (self.r as i128, self.s as i128);
        [[r, s], [s, -r]]
    }

    /// Squares the numerator in integers and compares with `t²·I`.
    pub fn squares_to_identity_exactly(&self) -> bool {
        let n = self.numerator();
        let t2 = self.t as i128 * self.t as i128;
        let sq = |i: usize, j: usize| n[i][0] * n[0][j] + n[i][1] * n[1][j];
        sq(0, 0) == t2 && sq(1, 1) == t2 && sq(0, 1) == 0 && sq(1, 0) == 0
    }

    pub fn to_mat2(&self) -> Mat2 {
        let t = self.t as f64;
        let (r, s) = (self.r as f64 / t, self.s as f64 / t);
        Mat2::from_raw(r, s, s, -r)
    }
}

/// The angle `φ ∈ [0, 2π)` with `R = H(φ)`, if `R` is a symmetric involution
/// other than `±I₂`.
pub fn householder_angle(r: &Mat2, tol: Tolerance) -> Option<f64> {
    let is_candidate = r.is_symmetric(tol.abs_tol) && r.trace().abs() <= tol.abs_tol && involution_residual(r) <= tol.abs_tol;
    if !is_candidate {
        return None;
    }
    let phi = r.b().atan2(r.a());
    Some(if phi < 0.0 { phi + TAU } else { phi }.min(TAU.next_down()))
}

/// Alias of [`householder_angle`] under the name used in the docs.
pub fn symmetric_involutions_are_householder(r: &Mat2, tol: Tolerance) -> Option<f64> {
    householder_angle(r, tol)
}

/// `Rot(-φ) = [cos φ, sin φ; -sin φ, cos φ]`, the clockwise rotation by `φ`.
pub fn clockwise_rotation(phi: f64) -> Mat2 {
    let (s, c) = phi.sin_cos();
    Mat2::from_raw(c, s, -s, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    fn m(a: f64, b: f64, c: f64, d: f64) -> Mat2 {
        Mat2::new(a, b, c, d).unwrap()
    }

    const TOL: Tolerance = Tolerance { abs_tol: 1e-9, exact_tol: 1e-12 };

    #[test]
    fn from_unit_examples() {
        let h = householder_from_unit(UnitVec2::new(0.0, 1.0).unwrap());
        assert_eq!(h, m(1.0, 0.0, 0.0, -1.0));
        let h = householder_from_unit(UnitVec2::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2).unwrap());
        assert!(h.max_diff(&m(0.0, 1.0, 1.0, 0.0)) <= 1e-15);
        for k in 0..24 {
            let phi = TAU * k as f64 / 24.0;
            let from_v = householder_from_unit(UnitVec2::mirror_normal(phi));
            assert!(from_v.max_diff(&householder_from_angle(phi).unwrap()) <= 1e-12);
        }
    }

    #[test]
    fn from_angle_examples() {
        assert_eq!(householder_from_angle(0.0).unwrap(), m(1.0, 0.0, 0.0, -1.0));
        assert!(householder_from_angle(PI).unwrap().max_diff(&m(-1.0, 0.0, 0.0, 1.0)) <= 1e-15);
        assert!(householder_from_angle(FRAC_PI_2).unwrap().max_diff(&m(0.0, 1.0, 1.0, 0.0)) <= 1e-15);
    }

    #[test]
    fn unit_vector_validation() {
        let v = UnitVec2::new(0.6, 0.8 + 1e-8).unwrap();
        assert!((v.v1().hypot(v.v2()) - 1.0).abs() <= 1e-15);
        assert!(matches!(UnitVec2::new(0.6, 0.81), Err(Error::NotUnitVector(_))));
        assert!(UnitVec2::new(0.0, 0.0).is_err());
        assert!(UnitVec2::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn pythagorean_examples() {
        let r = pythagorean_root(3, 4, 5).unwrap();
        assert_eq!(r, m(0.6, 0.8, 0.8, -0.6));
        assert!(PythagoreanRoot::new(3, 4, 5).unwrap().squares_to_identity_exactly());
        let r = pythagorean_root(5, 12, 13).unwrap();
        assert!(involution_residual(&r) <= 1e-15);
        assert!(PythagoreanRoot::new(5, 12, 13).unwrap().squares_to_identity_exactly());
        assert!(PythagoreanRoot::new(-8, 15, -17).unwrap().squares_to_identity_exactly());
        assert_eq!(pythagorean_root(1, 1, 2), Err(Error::NotPythagorean { r: 1, s: 1, t: 2 }));
        assert!(pythagorean_root(0, 0, 0).is_err());
    }

    #[test]
    fn angle_recovery() {
        let phi = householder_angle(&m(0.0, 1.0, 1.0, 0.0), TOL).unwrap();
        assert!((phi - FRAC_PI_2).abs() <= 1e-15);
        assert_eq!(householder_angle(&Mat2::IDENTITY, TOL), None);
        assert_eq!(householder_angle(&Mat2::NEG_IDENTITY, TOL), None);
        assert_eq!(householder_angle(&m(1.0, 2.0, 0.0, -1.0), TOL), None);
        assert_eq!(householder_angle(&m(0.0, 1.0, -1.0, 0.0), TOL), None);
        for k in 0..64 {
            let phi = TAU * k as f64 / 64.0;
            let back = householder_angle(&householder_from_angle(phi).unwrap(), TOL).unwrap();
            assert!((0.0..TAU).contains(&back));
            let diff = (back - phi).abs();
            assert!(diff <= 1e-12 || (TAU - diff) <= 1e-12, "phi {phi} -> {back}");
        }
    }

    #[test]
    fn reflection_properties() {
        for k in 0..64 {
            let phi = TAU * k as f64 / 64.0 - PI;
            let h = householder_from_angle(phi).unwrap();
            assert!(involution_residual(&h) <= 1e-12);
            assert_eq!(h, h.transpose());
            assert!((h.det() + 1.0).abs() <= 1e-12);
            let v = UnitVec2::mirror_normal(phi);
            assert!((h * v.to_vec2()).max_diff(-v.to_vec2()) <= 1e-12);
            assert!((h * v.perp()).max_diff(v.perp()) <= 1e-12);
            // reflect after rotating clockwise by φ
            let factored = m(1.0, 0.0, 0.0, -1.0) * clockwise_rotation(phi);
            assert!(factored.max_diff(&h) <= 1e-12);
        }
    }
}
