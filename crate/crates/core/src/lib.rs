//! Exact computation of the Leibnitz numbers `l(n,k) = 1/((n+1) C(n,k))`, their
//! two-parameter generalization `L(n,k;a,b)`, the Daehee, Changhee and `Y_n(λ)`
//! families, and an identity harness that checks relations between them with
//! exact rational arithmetic only.
//!
//! The polynomial and series containers are generic over [`Scalar`]; the
//! aliases below fix them to exact rationals, which is what every number-level
//! routine in this crate uses.

pub mod error;
pub mod generalized;
pub mod kernel;
pub mod scalar;
pub mod series;
pub mod special;
pub mod suite;
pub mod volkenborn;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;
/// Dense univariate polynomial over [`Rational`].
pub type UniPoly = kernel::DensePoly<Rational>;
/// Sparse polynomial in `a`, `b` over [`Rational`].
pub type BiPoly = kernel::SparseBiPoly<Rational>;
