//! Invariants of weighted K-stability for rank-one torus actions.
//!
//! The crate computes soliton candidates, weighted volumes, weighted expected
//! vanishing orders and Abban-Zhuang lower bounds from three kinds of data:
//!
//! * an Okounkov body given by rational vertices in three-space, sliced along
//!   its weight coordinate into piecewise-polynomial density profiles,
//! * fiberwise volume profiles (piecewise bivariate polynomials over chamber
//!   decompositions) describing refined linear series,
//! * one-dimensional densities for cones and projective bundles.
//!
//! All integration reduces to closed-form integrals of `polynomial * exp`,
//! implemented in [`expcalc`]. Geometry is exact over the rationals; analysis
//! is generic over the scalar type via [`scalar::Real`], with [`Scalar`] as
//! the concrete default.

pub mod error;
pub mod expcalc;
pub mod filtration;
pub mod geometry;
pub mod scalar;
pub mod soliton;
pub mod stability;

pub use error::CalcError;
pub use scalar::Real;

/// Default scalar type used by the CLI and the test suites.
pub type Scalar = f64;

/// Result alias for fallible operations in this crate.
pub type Result<T> = std::result::Result<T, CalcError>;
