//! Sparse multivariate polynomials over exact fields.

mod monomial;
mod parse;
mod polynomial;

pub use monomial::Monomial;
pub use parse::VarNames;
pub use polynomial::{HomogeneousDegree, Polynomial, Ring};
