//! Matrices of given trace and determinant as points of a quadric.
//!
//! ```bash
//! cargo run -p invgeo --example bell_coordinates
//! ```

use invgeo::{classify_quadric, from_bell, on_asymptotic_cone, quadric_residual, to_bell, LocusParams, Mat2, Tolerance};

fn main() -> invgeo::Result<()> {
    let tol = Tolerance::default();

    for (alpha, beta) in [(0.0, -1.0), (1.0, 0.0), (0.0, 0.0), (0.0, 1.0), (4.0, 3.0)] {
        let class = classify_quadric(LocusParams::new(alpha, beta)?);
        println!("S({alpha}, {beta}): {:<9} x^2 + y^2 - z^2 = {}", class.kind.as_str(), class.radius_sq);
    }

    let flip = Mat2::diag(1.0, -1.0)?;
    let p = to_bell(&flip, 0.0, tol)?;
    println!("\ndiag(1,-1) sits at ({:.6}, {}, {})", p.x, p.y, p.z);

    let x = Mat2::new(1.5, -2.0, 0.25, 2.5)?;
    let (alpha, beta) = x.trace_det();
    let p = to_bell(&x, alpha, tol)?;
    println!("{x} -> ({:.4}, {:.4}, {:.4}) in P({alpha})", p.x, p.y, p.z);
    println!("  back: {}", from_bell(p)?);
    println!("  quadric residual {:.1e}", quadric_residual(p, LocusParams::new(alpha, beta)?)?);

    for m in [Mat2::new(0.0, 1.0, 0.0, 0.0)?, Mat2::new(2.0, 1.0, -4.0, -2.0)?, Mat2::new(0.0, 1.0, 1.0, 0.0)?] {
        println!("{m} on the asymptotic cone: {}", on_asymptotic_cone(&m, tol));
    }
    Ok(())
}
