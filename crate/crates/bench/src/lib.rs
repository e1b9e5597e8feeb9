//! Shared inputs for the criterion benchmarks.

use mfkit_core::catalog::{power_sum, sample_type_mu, standard_quadric};
use mfkit_core::mf::StrengthDecomposition;
use mfkit_core::{Field, Polynomial, Ring};

pub fn quadric(s: usize) -> StrengthDecomposition {
    standard_quadric(s).0
}

/// A fixed cubic decomposition with four summands in six variables.
pub fn random_cubic() -> StrengthDecomposition {
    sample_type_mu(&[1, 1, 1, 1], 3, 5, 1, Field::Rational, 2).expect("valid type")
}

pub fn cubic_power_sum(n: usize) -> Polynomial {
    power_sum(3, n).expect("n >= 1")
}

/// `x0*x2 + x1*x3` over F_2.
pub fn binary_quadric() -> Polynomial {
    let ring = Ring::new(4, Field::prime(2).expect("2 is prime"));
    &(&ring.var(0) * &ring.var(2)) + &(&ring.var(1) * &ring.var(3))
}
