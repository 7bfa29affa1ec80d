//! Constructive Hermite normalization over finite fields.
//!
//! Every degree-5 extension E/F of finite fields contains a primitive element
//! whose minimal polynomial has the shape x^5 + c2 x^3 + c4 x + c5 (the t^4 and
//! t^2 coefficients vanish). This crate finds such an element explicitly: it
//! writes down the characteristic polynomial of a generic element
//! a = x0 + x1 z + ... + x4 z^4 symbolically, intersects the hyperplane c1 = 0
//! with the cubic surface c3 = 0, searches the surface for a rational point,
//! and reads the element off the point's coordinates. Reports are emitted as
//! machine-checkable JSON certificates.
//!
//! Modules:
//! - [`ff`]: arithmetic in GF(p) and GF(p^n), irreducibility, minimal and
//!   characteristic polynomials
//! - [`forms`]: sparse homogeneous forms and the symbolic coefficients c1..c5
//! - [`hermite`]: the end-to-end pipeline and its certificate
//! - [`cubic`]: cubic surface diagnostics and quadratic secant-line descent
//! - [`cli`]: the `hermite5` command-line interface

pub mod cli;
pub mod cubic;
pub mod ff;
pub mod forms;
pub mod hermite;

pub use cubic::{
    count_points, jacobian_singular_scan, quadratic_extension, rationality_test, secant_descent,
    CubicSurface, DescentOutcome, QuadExtPoint, SingularPoint,
};
pub use ff::{find_irreducible, irreducible_count, FFElement, FieldCtx, UniPoly};
pub use forms::{
    generic_char_coefficients, generic_multiplication_matrix, CharCoefficients,
    LinearSubstitution, MultiForm,
};
pub use hermite::{
    affine_zero_count, build_system, eliminate_c1, hermite_pipeline, projective_zero_count,
    recover_element, search_point, HermiteReport, HermiteSystem, ProjPoint,
};

/// Default cap on the number of affine/projective evaluations any single
/// exhaustive enumeration is allowed to perform.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The claimed characteristic is not a prime number.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// An extension modulus failed the irreducibility test.
    #[error("polynomial is not irreducible: {0}")]
    NotIrreducible(String),
    /// An extension modulus is not monic.
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),
    /// Inversion of zero, or polynomial division by the zero polynomial.
    #[error("division by zero")]
    DivisionByZero,
    /// A point or vector has the wrong number of coordinates.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// A linear form expected to have an invertible coefficient was zero.
    #[error("linear form is identically zero")]
    ZeroLinearForm,
    /// Exhaustive search ended without finding an admissible point.
    #[error("no admissible point found on the surface")]
    NoPointFound,
    /// The recovered projective point degenerates to the trivial one.
    #[error("point lifts to the excluded trivial point (1:0:0:0:0)")]
    BadPoint,
    /// A point handed to the descent does not lie on the surface.
    #[error("point is not on the surface")]
    NotOnSurface,
    /// An enumeration would exceed the configured budget.
    #[error("enumeration budget exceeded: need {needed} evaluations, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    /// Malformed text input (polynomial, element, or point syntax).
    #[error("parse error: {0}")]
    Parse(String),
    /// A structurally valid request outside the supported parameter range.
    #[error("{0}")]
    Unsupported(String),
}
