//! Chebyshev-weighted orthogonal polynomials on the reference triangle.
//!
//! The family `T_{n,r}(u, v, w)`, `0 <= r <= n`, lives in degree-`n`
//! Bernstein-Bezier form and restricts to the shifted Chebyshev polynomial
//! `T_r` along the `w = 0` edge. Under the weight
//! `W = u^(-1/2) v^(-1/2) (1-w)^gamma` every inner product of polynomials
//! is an exact rational multiple of pi, which this crate computes exactly
//! (integer `gamma`) or by tensor Chebyshev-Gauss x Gauss-Jacobi
//! quadrature (real `gamma > -1`). On top of that sit Gram matrices,
//! orthogonality verification suites, and diagonal weighted least-squares
//! projection.

pub mod bernstein;
pub mod chebyshev;
pub mod combin;
pub mod error;
pub mod exact;
pub mod project;
pub mod quadrature;
pub mod simplex;
pub mod weighted;

pub use bernstein::{BBPoly, BaryPoint, RatPoint, TriIndex};
pub use error::Error;
pub use exact::{PiRational, Rational};
pub use project::{evaluate_projection, project, ProjectionResult};
pub use simplex::{
    coeffs_closed_form, coeffs_recursive, eval_factored, q_poly, QPoly, SimplexOrthoPoly,
};
pub use weighted::{
    gram_matrix, weighted_inner_exact, weighted_inner_quadrature, GramMatrix, GramMode,
};
