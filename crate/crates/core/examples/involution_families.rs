//! The square roots of I₂ and -I₂, built from parameters and recognized again.
//!
//! ```bash
//! cargo run -p invgeo --example involution_families
//! ```

use invgeo::{
    classify_involution, involution_residual, make_case_root, make_general_root, make_skew_root, sample_involutions,
    skew_involution_residual, RootFamily, SkewRootParams, Tolerance,
};

fn main() -> invgeo::Result<()> {
    let tol = Tolerance::default();

    println!("special roots of I2:");
    for family in [
        RootFamily::Identity,
        RootFamily::NegIdentity,
        RootFamily::UpperBPlusMinus { b: 3.0 },
        RootFamily::UpperBMinusPlus { b: 3.0 },
        RootFamily::LowerCPlusMinus { c: -2.0 },
        RootFamily::LowerCMinusPlus { c: -2.0 },
    ] {
        let r = make_case_root(family)?;
        println!("  {:<20} {r}", family.tag());
    }

    println!("\ngeneral roots [a, b; (1-a^2)/b, -a]:");
    for (a, b) in [(0.0, 1.0), (0.3, 2.0), (-4.0, 0.5)] {
        let r = make_general_root(a, b)?;
        let back = classify_involution(&r, tol)?;
        println!("  a={a:<5} b={b:<4} {r}  residual {:.1e}  -> {:?}", involution_residual(&r), back);
    }

    println!("\nroots of -I2 [a, b; -(1+a^2)/b, -a]:");
    for (a, b) in [(0.0, 1.0), (2.0, -1.5)] {
        let r = make_skew_root(SkewRootParams { a, b })?;
        println!("  a={a:<4} b={b:<5} {r}  residual {:.1e}", skew_involution_residual(&r));
    }

    let sample = sample_involutions(10_000, 0, 10.0)?;
    let worst = sample.iter().map(involution_residual).fold(0.0, f64::max);
    println!("\n10000 seeded samples, worst |R^2 - I| = {worst:.2e}");
    Ok(())
}
