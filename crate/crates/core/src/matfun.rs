//! Functions of 2×2 real matrices through the Jordan form `A = Z J Z⁻¹`:
//! `f(A) = Z f(J) Z⁻¹`, where a 2×2 Jordan block maps to
//! `[f(λ), f'(λ); 0, f(λ)]`. Square roots get their own treatment: every
//! branch choice, and the size of the set of real square roots.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Tolerance};

/// Eigenvalues closer than this (relative to `max(1, |λ|)`) are repeated.
pub const REPEATED_EIGENVALUE_REL: f64 = 1e-8;

/// Real eigenvalues in ascending order.
///
/// Uses the discriminant `(a - d)² + 4bc`, which equals `tr² - 4 det` but does
/// not cancel for near-scalar matrices.
pub fn eigen2(m: &Mat2) -> Result<(f64, f64)> {
    let [a, b, c, d] = m.entries();
    let disc = (a - d) * (a - d) + 4.0 * b * c;
    if disc < -Tolerance::DEFAULT_EXACT {
        return Err(Error::ComplexEigenvalues(disc));
    }
    let root = disc.max(0.0).sqrt();
    let tr = a + d;
    // the root of larger magnitude first, the other from the determinant
    let big = 0.5 * (tr + root.copysign(tr));
    let (l1, l2) = if big != 0.0 { (big, m.det() / big) } else { (0.5 * (tr - root), 0.5 * (tr + root)) };
    Ok(if l1 <= l2 { (l1, l2) } else { (l2, l1) })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum JordanForm {
    DistinctDiag { l1: f64, l2: f64 },
    ScalarDiag { l: f64 },
    JordanBlock { l: f64 },
}

impl JordanForm {
    pub fn matrix(&self) -> Mat2 {
        match *self {
            JordanForm::DistinctDiag { l1, l2 } => Mat2::from_raw(l1, 0.0, 0.0, l2),
            JordanForm::ScalarDiag { l } => Mat2::from_raw(l, 0.0, 0.0, l),
            JordanForm::JordanBlock { l } => Mat2::from_raw(l, 1.0, 0.0, l),
        }
    }
}

/// `A = Z · J · Z⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Jordan2 {
    pub z: Mat2,
    pub z_inv: Mat2,
    pub form: JordanForm,
}

impl Jordan2 {
    pub fn reconstruct(&self) -> Mat2 {
        self.z * self.form.matrix() * self.z_inv
    }

    /// `Z · block · Z⁻¹`.
    fn conjugate(&self, block: Mat2) -> Mat2 {
        self.z * block * self.z_inv
    }
}

/// Unit null vector of the rank-one matrix `N`, taken orthogonal to its
/// larger row and signed so its largest entry is positive.
fn null_vector(n: &Mat2) -> (f64, f64) {
    let [a, b, c, d] = n.entries();
    let (p, q) = if a.hypot(b) >= c.hypot(d) { (a, b) } else { (c, d) };
    let len = p.hypot(q);
    let (x, y) = (-q / len, p / len);
    let sign = if x.abs() >= y.abs() { x.signum() } else { y.signum() };
    (sign * x, sign * y)
}

pub fn jordan2(m: &Mat2, tol: Tolerance) -> Result<Jordan2> {
    let (l1, l2) = eigen2(m)?;
    let scale = 1.0_f64.max(l1.abs()).max(l2.abs());
    if (l2 - l1).abs() < REPEATED_EIGENVALUE_REL * scale {
        let l = 0.5 * m.trace();
        let n = *m - Mat2::from_raw(l, 0.0, 0.0, l);
        if n.max_norm() <= tol.abs_tol * scale {
            return Ok(Jordan2 { z: Mat2::IDENTITY, z_inv: Mat2::IDENTITY, form: JordanForm::ScalarDiag { l } });
        }
        // Z = [N v₂ | v₂] with v₂ picking the larger column of N
        let [a, b, c, d] = n.entries();
        let (v1, v2) = if a.hypot(c) >= b.hypot(d) { ((a, c), (1.0, 0.0)) } else { ((b, d), (0.0, 1.0)) };
        let z = Mat2::from_raw(v1.0, v2.0, v1.1, v2.1);
        let z_inv = z.inverse(0.0).ok_or(Error::SingularConjugator)?;
        return Ok(Jordan2 { z, z_inv, form: JordanForm::JordanBlock { l } });
    }
    let e1 = null_vector(&(*m - Mat2::from_raw(l1, 0.0, 0.0, l1)));
    let e2 = null_vector(&(*m - Mat2::from_raw(l2, 0.0, 0.0, l2)));
    let z = Mat2::from_raw(e1.0, e2.0, e1.1, e2.1);
    let z_inv = z.inverse(0.0).ok_or(Error::SingularConjugator)?;
    Ok(Jordan2 { z, z_inv, form: JordanForm::DistinctDiag { l1, l2 } })
}

type RealFn = Box<dyn Fn(f64) -> f64 + Send + Sync>;

/// A scalar function together with its first derivative.
pub struct ScalarFunction {
    name: String,
    f: RealFn,
    f_prime: RealFn,
}

impl ScalarFunction {
    pub fn new(
        name: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f_prime: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self { name: name.into(), f: Box::new(f), f_prime: Box::new(f_prime) }
    }

    /// Principal square root; its derivative is infinite at 0.
    pub fn sqrt() -> Self {
        Self::new("sqrt", f64::sqrt, |x| 0.5 / x.sqrt())
    }

    pub fn square() -> Self {
        Self::new("square", |x| x * x, |x| 2.0 * x)
    }

    pub fn identity() -> Self {
        Self::new("identity", |x| x, |_| 1.0)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn value(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        (self.f_prime)(x)
    }
}

impl fmt::Debug for ScalarFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarFunction").field("name", &self.name).finish()
    }
}

fn eval_at(v: f64, at: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::FunctionUndefinedAtEigenvalue(at))
    }
}

pub fn matrix_function(m: &Mat2, f: &ScalarFunction, tol: Tolerance) -> Result<Mat2> {
    let j = jordan2(m, tol)?;
    let block = match j.form {
        JordanForm::DistinctDiag { l1, l2 } => Mat2::from_raw(eval_at(f.value(l1), l1)?, 0.0, 0.0, eval_at(f.value(l2), l2)?),
        JordanForm::ScalarDiag { l } => {
            let v = eval_at(f.value(l), l)?;
            Mat2::from_raw(v, 0.0, 0.0, v)
        }
        JordanForm::JordanBlock { l } => {
            let v = eval_at(f.value(l), l)?;
            Mat2::from_raw(v, eval_at(f.derivative(l), l)?, 0.0, v)
        }
    };
    let out = j.conjugate(block);
    if !out.is_finite() {
        return Err(Error::NonFinite("matrix function value"));
    }
    Ok(out)
}

/// Real square roots reachable by choosing a sign of `√λ` per Jordan block.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SqrtBranches {
    /// Same sign at every eigenvalue.
    pub primary: Vec<Mat2>,
    /// Mixed signs.
    pub non_primary: Vec<Mat2>,
    /// Set when the roots form a continuum that is not enumerated here
    /// (scalar matrices).
    pub infinite_family: bool,
}

impl SqrtBranches {
    pub fn all(&self) -> impl Iterator<Item = &Mat2> {
        self.primary.iter().chain(self.non_primary.iter())
    }

    pub fn len(&self) -> usize {
        self.primary.len() + self.non_primary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn is_zero(l: f64, tol: Tolerance) -> bool {
    l.abs() <= tol.exact_tol
}

pub fn sqrt_branches(m: &Mat2, tol: Tolerance) -> Result<SqrtBranches> {
    let j = jordan2(m, tol)?;
    let mut out = SqrtBranches { primary: Vec::new(), non_primary: Vec::new(), infinite_family: false };
    match j.form {
        JordanForm::DistinctDiag { l1, l2 } => {
            if l1 < -tol.exact_tol {
                return Ok(out);
            }
            let s2 = l2.sqrt();
            if is_zero(l1, tol) {
                // √0 = 0, so the mixed choices repeat the primary ones
                out.primary.push(j.conjugate(Mat2::from_raw(0.0, 0.0, 0.0, s2)));
                out.primary.push(j.conjugate(Mat2::from_raw(0.0, 0.0, 0.0, -s2)));
                return Ok(out);
            }
            let s1 = l1.sqrt();
            out.primary.push(j.conjugate(Mat2::from_raw(s1, 0.0, 0.0, s2)));
            out.primary.push(j.conjugate(Mat2::from_raw(-s1, 0.0, 0.0, -s2)));
            out.non_primary.push(j.conjugate(Mat2::from_raw(s1, 0.0, 0.0, -s2)));
            out.non_primary.push(j.conjugate(Mat2::from_raw(-s1, 0.0, 0.0, s2)));
        }
        JordanForm::ScalarDiag { l } => {
            out.infinite_family = true;
            if is_zero(l, tol) {
                out.primary.push(Mat2::ZERO);
            } else if l > 0.0 {
                let s = l.sqrt();
                out.primary.push(Mat2::from_raw(s, 0.0, 0.0, s));
                out.primary.push(Mat2::from_raw(-s, 0.0, 0.0, -s));
            }
        }
        JordanForm::JordanBlock { l } => {
            if l > tol.exact_tol {
                let root = jordan_block_root(l);
                out.primary.push(j.conjugate(root));
                out.primary.push(j.conjugate(-root));
            }
        }
    }
    Ok(out)
}

/// `[√λ, 1/(2√λ); 0, √λ]`, the principal root of `[λ, 1; 0, λ]`.
pub fn jordan_block_root(l: f64) -> Mat2 {
    let s = l.sqrt();
    Mat2::from_raw(s, 0.5 / s, 0.0, s)
}

/// How many real square roots a matrix has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "cardinality", content = "count", rename_all = "snake_case")]
pub enum RootCardinality {
    Zero,
    Finite(usize),
    Infinite,
}

/// Scalar matrices `λI` (any sign of `λ`) have infinitely many real roots;
/// otherwise the count is 4, 2 or 0 depending on the spectrum.
pub fn count_real_roots(m: &Mat2, tol: Tolerance) -> Result<RootCardinality> {
    Ok(match jordan2(m, tol)?.form {
        JordanForm::ScalarDiag { .. } => RootCardinality::Infinite,
        JordanForm::DistinctDiag { l1, .. } if is_zero(l1, tol) => RootCardinality::Finite(2),
        JordanForm::DistinctDiag { l1, .. } if l1 > 0.0 => RootCardinality::Finite(4),
        JordanForm::DistinctDiag { .. } => RootCardinality::Zero,
        JordanForm::JordanBlock { l } if l > tol.exact_tol => RootCardinality::Finite(2),
        JordanForm::JordanBlock { .. } => RootCardinality::Zero,
    })
}

fn check_root(a: &Mat2, r: &Mat2, tol: Tolerance) -> Result<()> {
    let residual = r.square().max_diff(a);
    if residual > tol.abs_tol * 1.0_f64.max(a.max_norm()) {
        return Err(Error::NotASquareRoot { residual });
    }
    Ok(())
}

/// `√α · R`, a square root of `αA` when `R² = A`.
pub fn scaled_roots(a: &Mat2, alpha: f64, r: &Mat2, tol: Tolerance) -> Result<Mat2> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::NonPositiveScale(alpha));
    }
    check_root(a, r, tol)?;
    Ok(r.scale(alpha.sqrt()))
}

/// `Z⁻¹ R Z`, a square root of `Z⁻¹ A Z` when `R² = A`.
pub fn conjugated_roots(a: &Mat2, zc: &Mat2, r: &Mat2, tol: Tolerance) -> Result<Mat2> {
    let zi = zc.inverse(tol.exact_tol).ok_or(Error::SingularConjugator)?;
    check_root(a, r, tol)?;
    Ok(zi * *r * *zc)
}
