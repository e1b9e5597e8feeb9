//! Homogeneous ideals: Gröbner bases, membership, dimension and Jacobian
//! constructions.

mod dimension;
mod groebner;
mod jacobian;
mod modular;

use std::sync::OnceLock;

pub use dimension::min_transversal;
pub use groebner::{groebner_basis, GroebnerBasis, TermOrder};
pub use jacobian::{jacobian_ideal, jacobian_minors_ideal};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

/// Ideal given by generators, with a lazily computed grevlex basis.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    basis: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Ideal {
            ring: self.ring,
            generators: self.generators.clone(),
            basis,
        }
    }
}

impl Ideal {
    /// Zero generators are dropped; all generators must live in `ring`.
    pub fn new(ring: Ring, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: g.ring().to_string(),
                    right: ring.to_string(),
                });
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring,
            generators: gens,
            basis: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Grevlex reduced basis, computed once and cached.
    pub fn groebner_basis(&self) -> Result<&GroebnerBasis> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = groebner_basis(self.ring, &self.generators, TermOrder::GRevLex)?;
        Ok(self.basis.get_or_init(|| b))
    }

    /// Basis in an explicit term order (not cached unless grevlex).
    pub fn groebner_basis_in(&self, order: TermOrder) -> Result<GroebnerBasis> {
        match order {
            TermOrder::GRevLex => self.groebner_basis().cloned(),
            _ => groebner_basis(self.ring, &self.generators, order),
        }
    }

    pub fn normal_form(&self, g: &Polynomial) -> Result<Polynomial> {
        self.groebner_basis()?.normal_form(g)
    }

    pub fn contains(&self, g: &Polynomial) -> Result<bool> {
        self.groebner_basis()?.contains(g)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.is_unit())
    }

    /// Krull dimension of the quotient ring.
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.nvars() - self.codimension()?)
    }

    /// Height of the ideal: variable count minus dimension.
    pub fn codimension(&self) -> Result<usize> {
        let gb = self.groebner_basis()?;
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let supports: Vec<u64> = gb
            .leading_monomials()
            .iter()
            .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
            .collect();
        Ok(min_transversal(&supports, self.nvars()))
    }

    /// The same generators viewed in a ring with more variables.
    pub fn extend_variables(&self, new_count: usize) -> Result<Ideal> {
        let ring = Ring::new(new_count, self.ring.field);
        let gens = self
            .generators
            .iter()
            .map(|g| g.extend_variables(new_count))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }
}
