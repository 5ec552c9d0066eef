//! The two families of straight lines on the hyperboloid of involutions.
//!
//! ```bash
//! cargo run -p invgeo --example hyperboloid_generators
//! ```

use invgeo::quadric::{generator_identity_residual, generator_point, principal_section_point};
use invgeo::{generator_directions, involution_residual, make_general_root, Mat2, Tolerance};

fn main() -> invgeo::Result<()> {
    let tol = Tolerance::default();
    let seed = Mat2::new(0.3, -0.7, 0.9, 0.2)?;

    for a in [principal_section_point(0.6)?, make_general_root(1.5, -0.8)?] {
        let pair = generator_directions(&a, &seed, tol)?;
        println!("A = {a}");
        println!("  U = {}   (AU = U, UA = -U, U^2 = 0)", pair.u);
        println!("  V = {}   (AV = -V, VA = V, V^2 = 0)", pair.v);
        println!("  identity residual {:.1e}", generator_identity_residual(&a, &pair));
        for t in [-2.0, -0.5, 1.0, 3.0] {
            let on_u = involution_residual(&generator_point(&a, &pair.u, t));
            let on_v = involution_residual(&generator_point(&a, &pair.v, t));
            println!("  t={t:<4}  |(A+tU)^2 - I| = {on_u:.1e}  |(A+tV)^2 - I| = {on_v:.1e}");
        }
    }

    // a seed can kill one ruling and not the other
    let a = Mat2::diag(1.0, -1.0)?;
    let x = Mat2::new(0.0, 1.0, 0.0, 0.0)?;
    match generator_directions(&a, &x, tol) {
        Ok(pair) => println!("\n{pair:?}"),
        Err(e) => println!("\nseed {x} at {a}: {e}"),
    }
    Ok(())
}
