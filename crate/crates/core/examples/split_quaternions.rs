//! Split-quaternion arithmetic and the matching 2×2 matrices.
//!
//! ```bash
//! cargo run -p invgeo --example split_quaternions
//! ```

use std::f64::consts::FRAC_PI_3;

use invgeo::splitquat::{decompose_root, unit_root_identity, unit_root_neg, RootTarget};
use invgeo::{SplitQuat, Tolerance};

fn main() -> invgeo::Result<()> {
    let tol = Tolerance::default();
    let (i, j, k) = (SplitQuat::I, SplitQuat::J, SplitQuat::K);
    println!("ij = {:?}   jk = {:?}   ki = {:?}", i * j, j * k, k * i);
    println!("i^2 = {:?}   j^2 = {:?}", i * i, j * j);

    for q in [SplitQuat::scalar(2.0), i, j, i + j, SplitQuat::new(1.0, 2.0, 0.5, -1.0)?] {
        let m = q.to_matrix();
        println!("{q:?}: modulus {} ({:?}), matrix {m}, det {}", q.modulus(), q.classify(tol), m.det());
    }

    let p = SplitQuat::new(1.0, -2.0, 0.5, 3.0)?;
    let q = SplitQuat::new(0.25, 1.0, -1.0, 2.0)?;
    let gap = (p * q).to_matrix().max_diff(&(p.to_matrix() * q.to_matrix()));
    println!("\nmatrix of pq vs product of matrices: {gap:.1e}");
    println!("p^-1 = {:?}", p.inverse(tol)?);

    let r = unit_root_identity(0.8, FRAC_PI_3);
    println!("\nroot of +1: {r:?}, square {:?}", r * r);
    let d = decompose_root(0.8, FRAC_PI_3, RootTarget::Identity)?;
    println!("  = {:.4} H + {:.4} J with H = {}", d.coef_h, d.coef_j, d.h);
    let s = unit_root_neg(0.8, FRAC_PI_3)?;
    println!("root of -1: {s:?}, square {:?}", s * s);
    if let Err(e) = unit_root_neg(std::f64::consts::FRAC_PI_2, 0.0) {
        println!("at t = pi/2: {e}");
    }
    Ok(())
}
