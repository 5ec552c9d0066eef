//! Multi-start Newton search for real solutions of `X² = A`.
//!
//! This is an independent check on [`crate::matfun`]: it knows nothing about
//! eigenvalues or Jordan forms and simply solves the four polynomial equations
//! in the entries of `X` from a grid of starting points.
//!
//! Each start is run twice: once free, which finds isolated roots, and once
//! with the entry `x11` frozen at its starting value. Plain Newton on
//! `X² = 0` steps to `X/2` and collapses every start onto `X = 0`; the frozen
//! run instead lands on wherever the slice `x11 = const` cuts a continuum of
//! roots, while isolated roots are missed by the slice and fail the residual
//! test.

use nalgebra::{Matrix4, Vector4};
use serde::Serialize;

use crate::mat2::Mat2;

/// Starting grid and iteration budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleGrid {
    /// Starts lie in `[-extent, extent]⁴` (scaled by `√‖A‖` when that is larger than 1).
    pub extent: f64,
    /// Grid points per coordinate; `per_axis⁴` starts in total.
    pub per_axis: usize,
    pub max_iter: usize,
    /// Solutions closer than this are merged.
    pub dedup: f64,
}

impl Default for OracleGrid {
    fn default() -> Self {
        Self { extent: 3.0, per_axis: 4, max_iter: 100, dedup: 1e-6 }
    }
}

/// Distinct solutions beyond this count are reported as [`OracleCount::Many`].
pub const MANY_THRESHOLD: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OracleCount {
    Zero,
    Finite(usize),
    Many,
}

impl OracleCount {
    pub fn of(found: &[Mat2]) -> Self {
        match found.len() {
            0 => OracleCount::Zero,
            n if n <= MANY_THRESHOLD => OracleCount::Finite(n),
            _ => OracleCount::Many,
        }
    }
}

fn residual(x: &Vector4<f64>, a: &[f64; 4]) -> Vector4<f64> {
    let (p, q, r, s) = (x[0], x[1], x[2], x[3]);
    Vector4::new(p * p + q * r - a[0], q * (p + s) - a[1], r * (p + s) - a[2], r * q + s * s - a[3])
}

fn jacobian(x: &Vector4<f64>) -> Matrix4<f64> {
    let (p, q, r, s) = (x[0], x[1], x[2], x[3]);
    #[rustfmt::skip]
    let j = Matrix4::new(
        2.0 * p, r, q, 0.0,
        q, p + s, 0.0, q,
        r, 0.0, p + s, r,
        0.0, r, q, 2.0 * s,
    );
    j
}

/// Gauss-Newton with an SVD pseudo-inverse step, so that singular Jacobians
/// (continua of roots, roots with a zero eigenvalue) still converge.
/// With `freeze_first` the Jacobian column of `x11` is zeroed, so the
/// minimum-norm step leaves that entry alone.
fn newton(start: Vector4<f64>, a: &[f64; 4], max_iter: usize, blowup: f64, freeze_first: bool) -> Option<Vector4<f64>> {
    let mut x = start;
    for _ in 0..max_iter {
        let f = residual(&x, a);
        if f.amax() == 0.0 {
            break;
        }
        let mut j = jacobian(&x);
        if freeze_first {
            j.column_mut(0).fill(0.0);
        }
        let step = j.svd(true, true).solve(&f, 1e-14).ok()?;
        x -= step;
        let size = x.amax();
        if size.is_nan() || size >= blowup {
            return None;
        }
    }
    Some(x)
}

/// De-duplicated real solutions of `X² = A` found from every grid start.
///
/// A candidate is kept when `‖X² - A‖ ≤ 1e-9·max(1, ‖A‖)` and
/// `‖X‖ ≤ 20·max(1, √‖A‖)` (max-norms).
pub fn brute_force_roots(a: &Mat2, grid: &OracleGrid) -> Vec<Mat2> {
    let target = a.entries();
    let norm_a = a.max_norm();
    let accept = 1e-9 * norm_a.max(1.0);
    let bound = 20.0 * norm_a.sqrt().max(1.0);
    let extent = grid.extent * norm_a.sqrt().max(1.0);
    let n = grid.per_axis.max(1);
    // cell centres, nudged per coordinate so no start sits on a symmetric
    // configuration such as X = 0
    let coord = |i: usize, k: usize| -extent + 2.0 * extent * (i as f64 + 0.5) / n as f64 + 0.0137 * (k as f64 + 1.0);

    let mut found: Vec<Mat2> = Vec::new();
    for idx in 0..n.pow(4) {
        let digits = [idx % n, (idx / n) % n, (idx / n / n) % n, idx / n / n / n];
        let start = Vector4::from_fn(|k, _| coord(digits[k], k));
        for freeze_first in [false, true] {
            let Some(x) = newton(start, &target, grid.max_iter, 1e8, freeze_first) else { continue };
            if residual(&x, &target).amax() > accept || x.amax() > bound {
                continue;
            }
            let Ok(cand) = Mat2::new(x[0], x[1], x[2], x[3]) else { continue };
            if found.iter().all(|f| f.max_diff(&cand) > grid.dedup) {
                found.push(cand);
            }
        }
    }
    found
}
