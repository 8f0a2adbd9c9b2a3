//! Exact constructions of good toric compactifications for subvarieties of
//! the algebraic torus `(C*)^n`.
//!
//! Given a system of Laurent polynomial equations, [`compactify::good_system`]
//! computes the codimension `k` of the variety it defines and returns
//! Laurent polynomials `P_1, …, P_k` vanishing on it whose Newton polytopes
//! have affine independent edges, together with the normal fan of
//! `Δ(P_1) + … + Δ(P_k)` and machine-checkable certificates.
//!
//! All arithmetic is exact: integers are arbitrary precision and
//! coefficients are rationals.

pub mod compactify;
pub mod elimination;
mod error;
pub mod lattice;
pub mod laurent;
mod linalg;
pub mod mixedvol;
pub mod polytope;

pub use error::{Error, Result};
pub use lattice::{Covector, LatticeVector, TorusSplit};
pub use laurent::{LaurentPolynomial, UnivariatePoly};
pub use polytope::{Face, Fan, LatticePolytope};
