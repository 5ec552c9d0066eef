//! Plane-geometric reading of the root families: each root is a product of
//! reflections, shears, rotations and magnifications of the plane.
//!
//! Factors are listed left to right as in the matrix product, so they act on
//! a point right to left.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Tolerance, Vec2};
use crate::roots::RootFamily;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "param", rename_all = "snake_case")]
pub enum ElementaryTransform {
    Identity,
    /// `(x, y) ↦ (x, -y)`, reflection in the x-axis.
    ReflectX,
    /// `(x, y) ↦ (-x, y)`, reflection in the y-axis.
    ReflectY,
    /// `(x, y) ↦ (-x, -y)`
    PointReflectOrigin,
    /// `(x, y) ↦ (x + by, y)`. Often described as a translation parallel to
    /// the x-axis by `by`; it is linear, a shear.
    ShearX(f64),
    /// `(x, y) ↦ (x, cx + y)`
    ShearY(f64),
    /// `(x, y) ↦ (x cos φ + y sin φ, -x sin φ + y cos φ)`
    RotateClockwise(f64),
    /// `(x, y) ↦ (ρx, ρy)`
    Magnify(f64),
    /// The additive term `(x, y) ↦ (0, κx)`, added to the product rather than
    /// multiplied into it.
    ShearYAdd(f64),
}

impl ElementaryTransform {
    pub fn matrix(&self) -> Mat2 {
        match *self {
            ElementaryTransform::Identity => Mat2::IDENTITY,
            ElementaryTransform::ReflectX => Mat2::from_raw(1.0, 0.0, 0.0, -1.0),
            ElementaryTransform::ReflectY => Mat2::from_raw(-1.0, 0.0, 0.0, 1.0),
            ElementaryTransform::PointReflectOrigin => Mat2::NEG_IDENTITY,
            ElementaryTransform::ShearX(b) => Mat2::from_raw(1.0, b, 0.0, 1.0),
            ElementaryTransform::ShearY(c) => Mat2::from_raw(1.0, 0.0, c, 1.0),
            ElementaryTransform::RotateClockwise(phi) => {
                let (s, c) = phi.sin_cos();
                Mat2::from_raw(c, s, -s, c)
            }
            ElementaryTransform::Magnify(rho) => Mat2::from_raw(rho, 0.0, 0.0, rho),
            ElementaryTransform::ShearYAdd(k) => Mat2::from_raw(0.0, 0.0, k, 0.0),
        }
    }

    pub fn is_additive(&self) -> bool {
        matches!(self, ElementaryTransform::ShearYAdd(_))
    }

    /// The point map written out directly, without going through the matrix.
    pub fn map_point(&self, p: Vec2) -> Vec2 {
        let (x, y) = (p.x(), p.y());
        let (u, v) = match *self {
            ElementaryTransform::Identity => (x, y),
            ElementaryTransform::ReflectX => (x, -y),
            ElementaryTransform::ReflectY => (-x, y),
            ElementaryTransform::PointReflectOrigin => (-x, -y),
            ElementaryTransform::ShearX(b) => (x + b * y, y),
            ElementaryTransform::ShearY(c) => (x, c * x + y),
            ElementaryTransform::RotateClockwise(phi) => {
                let (s, c) = phi.sin_cos();
                (x * c + y * s, -x * s + y * c)
            }
            ElementaryTransform::Magnify(rho) => (rho * x, rho * y),
            ElementaryTransform::ShearYAdd(k) => (0.0, k * x),
        };
        Vec2::from_raw(u, v)
    }
}

/// `factors[0] · factors[1] · … + additive`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub factors: Vec<ElementaryTransform>,
    pub additive: Option<ElementaryTransform>,
}

impl Decomposition {
    pub fn recompose(&self) -> Mat2 {
        let product = self.factors.iter().fold(Mat2::IDENTITY, |acc, f| acc * f.matrix());
        match self.additive {
            Some(add) => product + add.matrix(),
            None => product,
        }
    }
}

/// `T p`
pub fn apply(t: &Mat2, p: Vec2) -> Vec2 {
    t.mul_vec(p)
}

/// Two-factor products for the triangular roots, a single factor for `±I`.
pub fn decompose_case(family: RootFamily) -> Result<Decomposition> {
    use ElementaryTransform::*;
    let factors = match family {
        RootFamily::Identity => vec![Identity],
        RootFamily::NegIdentity => vec![PointReflectOrigin],
        // [1, b; 0, -1] = [1, 0; 0, -1][1, b; 0, 1]
        RootFamily::UpperBPlusMinus { b } => vec![ReflectX, ShearX(b)],
        // [-1, b; 0, 1] = [1, b; 0, 1][-1, 0; 0, 1]
        RootFamily::UpperBMinusPlus { b } => vec![ShearX(b), ReflectY],
        // [1, 0; c, -1] = [1, 0; c, 1][1, 0; 0, -1]
        RootFamily::LowerCPlusMinus { c } => vec![ShearY(c), ReflectX],
        // [-1, 0; c, 1] = [-1, 0; 0, 1][1, 0; c, 1]
        RootFamily::LowerCMinusPlus { c } => vec![ReflectY, ShearY(c)],
        RootFamily::General { .. } => return Err(Error::WrongDecomposer),
    };
    Ok(Decomposition { factors, additive: None })
}

/// `X = R₃R₂R₁ + R₄` with `R₃ = ρI`, `R₂` the reflection in the x-axis,
/// `R₁` the clockwise rotation by `φ`, and `R₄ = [0, 0; κ, 0]`, where
/// `a = ρ cos φ`, `b = ρ sin φ` and `κ = (1 - ρ²)/b`.
///
/// `R₃` is scalar and may sit anywhere in the product. `R₂` and `R₁` do not
/// commute, so `R₁R₂R₃` is a different matrix.
pub fn decompose_general(x: &Mat2, tol: Tolerance) -> Result<Decomposition> {
    let [a, b, _, _] = x.entries();
    if x.trace().abs() > tol.abs_tol || (x.det() + 1.0).abs() > tol.abs_tol * 1.0_f64.max(x.max_norm().powi(2)) {
        let residual = crate::roots::involution_residual(x);
        return Err(Error::NotAnInvolution { residual });
    }
    if b.abs() <= tol.exact_tol {
        return Err(Error::DegenerateAngle);
    }
    let rho = a.hypot(b);
    let phi = b.atan2(a);
    let kappa = (1.0 - rho * rho) / b;
    use ElementaryTransform::*;
    Ok(Decomposition { factors: vec![Magnify(rho), ReflectX, RotateClockwise(phi)], additive: Some(ShearYAdd(kappa)) })
}

/// `[p, Tp, T²p, …, Tˢᵗᵉᵖˢp]`
pub fn orbit(t: &Mat2, p: Vec2, steps: usize) -> Result<Vec<Vec2>> {
    if steps == 0 {
        return Err(Error::InvalidCount);
    }
    let mut out = Vec::with_capacity(steps + 1);
    out.push(p);
    for i in 0..steps {
        out.push(t.mul_vec(out[i]));
    }
    Ok(out)
}
