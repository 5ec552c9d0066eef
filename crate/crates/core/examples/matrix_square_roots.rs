//! Every real square root of a 2×2 matrix, and how many there are.
//!
//! ```bash
//! cargo run -p invgeo --example matrix_square_roots
//! ```

use invgeo::oracle::{brute_force_roots, OracleCount, OracleGrid};
use invgeo::{count_real_roots, jordan2, matrix_function, sqrt_branches, Mat2, ScalarFunction, Tolerance};

fn main() -> invgeo::Result<()> {
    let tol = Tolerance::default();
    let suite = [
        ("diag(1,4)", Mat2::diag(1.0, 4.0)?),
        ("[0,1;-2,3]", Mat2::new(0.0, 1.0, -2.0, 3.0)?),
        ("[4,1;0,4]", Mat2::new(4.0, 1.0, 0.0, 4.0)?),
        ("diag(5,0)", Mat2::diag(5.0, 0.0)?),
        ("4I", Mat2::scalar(4.0)?),
        ("-I", Mat2::NEG_IDENTITY),
        ("[0,1;0,0]", Mat2::new(0.0, 1.0, 0.0, 0.0)?),
        ("diag(-1,-4)", Mat2::diag(-1.0, -4.0)?),
    ];
    for (name, a) in suite {
        let j = jordan2(&a, tol)?;
        let branches = sqrt_branches(&a, tol)?;
        let count = count_real_roots(&a, tol)?;
        let oracle = OracleCount::of(&brute_force_roots(&a, &OracleGrid::default()));
        println!("{name:<12} {:?}", j.form);
        println!("  count {count:?}, brute force {oracle:?}");
        for r in &branches.primary {
            println!("  primary     {r}");
        }
        for r in &branches.non_primary {
            println!("  non-primary {r}");
        }
        if branches.infinite_family {
            println!("  ... and a continuum of further roots");
        }
    }

    let a = Mat2::new(1.0, 1.0, 0.0, 1.0)?;
    let cube = ScalarFunction::new("cube", |x| x * x * x, |x| 3.0 * x * x);
    println!("\n[1,1;0,1]^3 through the Jordan form: {}", matrix_function(&a, &cube, tol)?);
    Ok(())
}
