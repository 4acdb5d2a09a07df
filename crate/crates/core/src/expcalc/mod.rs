//! Closed-form calculus for `polynomial * exponential` integrands.
//!
//! Every invariant in this crate is ultimately a finite sum of integrals
//! `int p(t) e^{mu t} dt` over bounded intervals. [`integrate_exp_poly`]
//! evaluates these through the regularized lower incomplete gamma function,
//! which stays accurate uniformly in `mu` (the naive by-parts recursion loses
//! all significant digits already for moderate `|mu|`).

mod bipoly;
mod gamma;
mod integrate;
mod piecewise;
mod poly;

pub use bipoly::{inner_integrate, AffineForm, BiPoly};
pub use integrate::integrate_exp_poly;
pub use piecewise::{integrate_piecewise, ExpTerm, PiecewiseExpPoly};
pub use poly::Poly;
