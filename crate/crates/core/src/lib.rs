//! Exact computer algebra for graded matrix factorizations of homogeneous
//! hypersurfaces and the strength invariants that control their ranks.

pub mod catalog;
pub mod error;
pub mod field;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod mf;
pub mod poly;
pub mod strength;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use poly::{HomogeneousDegree, Monomial, Polynomial, Ring, VarNames};
