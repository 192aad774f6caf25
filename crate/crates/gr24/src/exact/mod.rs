//! Exact arithmetic: rationals, real quadratic surds, matrices and polynomials.

pub mod field;
pub mod matrix;
pub mod multipoly;
pub mod rat;
pub mod surd;
pub mod unipoly;

pub use field::Field;
pub use matrix::{Matrix, RatMatrix};
pub use multipoly::{monomials, Mono, MultiPoly};
pub use rat::Rat;
pub use surd::Surd;
pub use unipoly::{real_roots, sturm_isolate, RootInterval, Sturm, SturmError, UniPoly};
