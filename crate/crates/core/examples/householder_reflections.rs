//! Symmetric square roots of I₂ are the plane reflections `I - 2vvᵀ`.
//!
//! ```bash
//! cargo run -p invgeo --example householder_reflections
//! ```

use std::f64::consts::PI;

use invgeo::householder::{clockwise_rotation, PythagoreanRoot};
use invgeo::{householder_angle, householder_from_angle, householder_from_unit, Mat2, Tolerance, UnitVec2, Vec2};

fn main() -> invgeo::Result<()> {
    let tol = Tolerance::default();

    for k in 0..4 {
        let phi = k as f64 * PI / 4.0;
        let h = householder_from_angle(phi)?;
        let v = UnitVec2::mirror_normal(phi);
        let hv = h * v.to_vec2();
        println!("phi={phi:.4}  H={h}  v=({:.4}, {:.4})  Hv=({:.4}, {:.4})", v.v1(), v.v2(), hv.x(), hv.y());
        let factored = Mat2::diag(1.0, -1.0)? * clockwise_rotation(phi);
        assert!(factored.max_diff(&h) < 1e-12);
    }

    let h = householder_from_unit(UnitVec2::new(0.6, 0.8)?);
    println!("\nreflection with normal (0.6, 0.8): {h}, angle {:?}", householder_angle(&h, tol));
    println!("mirror image of (1, 0): {:?}", h * Vec2::new(1.0, 0.0)?);

    for (r, s, t) in [(3, 4, 5), (5, 12, 13), (8, 15, 17)] {
        let root = PythagoreanRoot::new(r, s, t)?;
        println!("({r}, {s}, {t}): {}  squares to I exactly: {}", root.to_mat2(), root.squares_to_identity_exactly());
    }
    Ok(())
}
