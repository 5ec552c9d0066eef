//! Square roots of I₂ as products of reflections, shears and rotations.
//!
//! ```bash
//! cargo run -p invgeo --example plane_transforms
//! ```

use invgeo::{
    classify_involution, decompose_case, decompose_general, make_general_root, make_skew_root, orbit, Mat2, RootFamily, SkewRootParams,
    Tolerance, Vec2,
};

fn main() -> invgeo::Result<()> {
    let tol = Tolerance::default();

    for r in [Mat2::new(1.0, 2.0, 0.0, -1.0)?, Mat2::new(-1.0, 0.0, 3.0, 1.0)?, Mat2::NEG_IDENTITY, make_general_root(0.0, 2.0)?] {
        let family = classify_involution(&r, tol)?;
        let d = match family {
            RootFamily::General { .. } => decompose_general(&r, tol)?,
            other => decompose_case(other)?,
        };
        println!("{r} = {:?} + {:?}", d.factors, d.additive);
        println!("  recomposed {}", d.recompose());
    }

    let p = Vec2::new(3.0, 2.0)?;
    let r = make_general_root(0.5, 1.5)?;
    println!("\ninvolution orbit of (3, 2):");
    for (i, q) in orbit(&r, p, 4)?.iter().enumerate() {
        println!("  {i}: ({:.4}, {:.4})", q.x(), q.y());
    }
    let s = make_skew_root(SkewRootParams { a: 0.5, b: 1.5 })?;
    println!("skew-involution orbit of (3, 2):");
    for (i, q) in orbit(&s, p, 4)?.iter().enumerate() {
        println!("  {i}: ({:.4}, {:.4})", q.x(), q.y());
    }
    Ok(())
}
