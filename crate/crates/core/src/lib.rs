//! Square roots of `±I₂` and the geometry of 2×2 real matrices.
//!
//! * [`roots`]: the parametric families of involutions (`R² = I`) and
//!   skew-involutions (`R² = -I`), classification and seeded sampling.
//! * [`quadric`]: the locus `S(α, β)` of matrices with given trace and
//!   determinant as a quadric surface in Bell coordinates, with its rulings.
//! * [`householder`]: symmetric involutions as reflections `I - 2vvᵀ`.
//! * [`splitquat`]: split-quaternions and their isomorphism with 2×2 matrices.
//! * [`matfun`]: matrix functions through the Jordan form; counting square roots.
//! * [`xform`]: roots as products of elementary plane transformations.
//! * [`oracle`]: a brute-force Newton solver for `X² = A`, used to cross-check [`matfun`].
//! * [`cli`]: the `invgeo` command line.
//!
//! ```
//! use invgeo::{make_general_root, involution_residual, classify_involution, RootFamily, Tolerance};
//!
//! let r = make_general_root(0.3, 2.0).unwrap();
//! assert!(involution_residual(&r) < 1e-15);
//! assert!(matches!(classify_involution(&r, Tolerance::default()), Ok(RootFamily::General { .. })));
//! ```

pub mod cli;
pub mod error;
pub mod householder;
pub mod mat2;
pub mod matfun;
pub mod oracle;
pub mod quadric;
pub mod roots;
pub mod splitquat;
pub mod xform;

pub use error::{Error, Result};
pub use householder::{householder_angle, householder_from_angle, householder_from_unit, pythagorean_root, PythagoreanRoot, UnitVec2};
pub use mat2::{Mat2, Tolerance, Vec2};
pub use matfun::{
    conjugated_roots, count_real_roots, eigen2, jordan2, matrix_function, scaled_roots, sqrt_branches, Jordan2, JordanForm,
    RootCardinality, ScalarFunction, SqrtBranches,
};
pub use quadric::{
    classify_quadric, from_bell, generator_directions, in_locus, on_asymptotic_cone, quadric_residual, sample_surface, to_bell, BellPoint,
    GeneratorPair, LocusParams, Ruling, SurfaceClass, SurfaceKind,
};
pub use roots::{
    classify_involution, involution_residual, make_case_root, make_general_root, make_skew_root, sample_involutions,
    sample_skew_involutions, skew_involution_residual, RootFamily, SkewRootParams,
};
pub use splitquat::{CausalClass, SplitQuat};
pub use xform::{apply, decompose_case, decompose_general, orbit, Decomposition, ElementaryTransform};
