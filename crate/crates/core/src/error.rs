use thiserror::Error;

/// Errors produced by the library. Every variant has a stable string code
/// (see [`Error::code`]) that the command-line front-end reports verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("invalid tolerance: need 0 < exact_tol <= abs_tol, got abs_tol={abs_tol}, exact_tol={exact_tol}")]
    InvalidTolerance { abs_tol: f64, exact_tol: f64 },
    #[error("parameter `{name}` is too close to zero ({value})")]
    DegenerateParameter { name: &'static str, value: f64 },
    #[error("the general family must be built with make_general_root")]
    WrongConstructor,
    #[error("matrix does not square to the identity (residual {residual})")]
    NotAnInvolution { residual: f64 },
    #[error("count must be at least 1")]
    InvalidCount,
    #[error("parameter range must exceed the sampler's lower bound on |b|, got {0}")]
    InvalidRange(f64),
    #[error("trace {trace} does not match hyperplane alpha = {alpha}")]
    NotInHyperplane { trace: f64, alpha: f64 },
    #[error("Bell point lives in P({point}) but the locus has alpha = {locus}")]
    AlphaMismatch { point: f64, locus: f64 },
    #[error("matrix is not a point of S(0,-1)")]
    NotOnSurface,
    #[error("seed matrix produced a zero generator direction")]
    DegenerateSeed,
    #[error("vector norm {0} is not within 1e-6 of 1")]
    NotUnitVector(f64),
    #[error("({r}, {s}, {t}) is not a Pythagorean triple")]
    NotPythagorean { r: i64, s: i64, t: i64 },
    #[error("split-quaternion is lightlike and has no inverse")]
    NotInvertible,
    #[error("parametrization is singular at t = {0}")]
    SingularParameter(f64),
    #[error("matrix has complex eigenvalues (discriminant {0})")]
    ComplexEigenvalues(f64),
    #[error("function is undefined at eigenvalue {0}")]
    FunctionUndefinedAtEigenvalue(f64),
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("conjugating matrix is singular")]
    SingularConjugator,
    #[error("matrix does not square to the given target (residual {residual})")]
    NotASquareRoot { residual: f64 },
    #[error("general roots are decomposed with decompose_general")]
    WrongDecomposer,
    #[error("sin(phi) is too close to zero; use the case decomposition")]
    DegenerateAngle,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonFinite(_) => "non_finite",
            Error::InvalidTolerance { .. } => "invalid_tolerance",
            Error::DegenerateParameter { .. } => "degenerate_parameter",
            Error::WrongConstructor => "wrong_constructor",
            Error::NotAnInvolution { .. } => "not_an_involution",
            Error::InvalidCount => "invalid_count",
            Error::InvalidRange(_) => "invalid_range",
            Error::NotInHyperplane { .. } => "not_in_hyperplane",
            Error::AlphaMismatch { .. } => "alpha_mismatch",
            Error::NotOnSurface => "not_on_surface",
            Error::DegenerateSeed => "degenerate_seed",
            Error::NotUnitVector(_) => "not_unit_vector",
            Error::NotPythagorean { .. } => "not_pythagorean",
            Error::NotInvertible => "not_invertible",
            Error::SingularParameter(_) => "singular_parameter",
            Error::ComplexEigenvalues(_) => "complex_eigenvalues",
            Error::FunctionUndefinedAtEigenvalue(_) => "function_undefined_at_eigenvalue",
            Error::NonPositiveScale(_) => "non_positive_scale",
            Error::SingularConjugator => "singular_conjugator",
            Error::NotASquareRoot { .. } => "not_a_square_root",
            Error::WrongDecomposer => "wrong_decomposer",
            Error::DegenerateAngle => "degenerate_angle",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
