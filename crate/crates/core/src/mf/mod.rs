//! Graded matrix factorizations: containers, verification, determinants and
//! the standard constructions.

mod classical;
mod decomposition;
mod determinant;
mod knorrer;
mod matrix;
mod search;

pub use classical::{adjugate_mf, generic_matrix, pfaffian, pfaffian_mf, skew_matrix};
pub use decomposition::StrengthDecomposition;
pub use determinant::{
    determinant, mcm_rank_of, randomized_det_check, BAREISS_MAX_RANK, COFACTOR_MAX_RANK,
};
pub use knorrer::{knorrer_build, tensor_step, two_term_mf};
pub use matrix::{GradedFreeModule, GradedMatrix, GradingViolation};
pub use search::{search_reduced_mf, SearchPattern, SEARCH_BUDGET_LOG2};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

/// `phi: G -> F` and `psi: F(-d) -> G` with `phi psi = f id` and `psi phi = f id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFactorization {
    f: Polynomial,
    phi: GradedMatrix,
    psi: GradedMatrix,
}

/// Which matrix a witness refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Phi,
    Psi,
    PhiPsi,
    PsiPhi,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Phi => "phi",
            Side::Psi => "psi",
            Side::PhiPsi => "phi*psi",
            Side::PsiPhi => "psi*phi",
        }
    }
}

/// First failed check, in the order products, grading, reducedness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Product {
        side: Side,
        row: usize,
        col: usize,
        expected: Polynomial,
        actual: Polynomial,
    },
    Twists {
        detail: String,
    },
    Grading {
        side: Side,
        violation: GradingViolation,
    },
    Unit {
        side: Side,
        row: usize,
        col: usize,
        entry: Polynomial,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub products_ok: bool,
    pub graded_ok: bool,
    pub reduced_ok: bool,
    pub witness: Option<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.products_ok && self.graded_ok && self.reduced_ok
    }
}

impl MatrixFactorization {
    /// Checks shapes only: `f` nonzero homogeneous, both matrices square of
    /// equal size over the ring of `f`. The identities are checked by
    /// [`Self::verify`].
    pub fn new(f: Polynomial, phi: GradedMatrix, psi: GradedMatrix) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.homogeneous_degree().is_none() {
            return Err(Error::Inhomogeneous { index: 0 });
        }
        for m in [&phi, &psi] {
            if !m.is_square() {
                return Err(Error::NotSquare {
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
            if m.ring() != f.ring() {
                return Err(Error::RingMismatch {
                    left: m.ring().to_string(),
                    right: f.ring().to_string(),
                });
            }
        }
        if phi.rows() != psi.rows() {
            return Err(Error::Shape(format!(
                "phi has rank {} but psi has rank {}",
                phi.rows(),
                psi.rows()
            )));
        }
        Ok(MatrixFactorization { f, phi, psi })
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn phi(&self) -> &GradedMatrix {
        &self.phi
    }

    pub fn psi(&self) -> &GradedMatrix {
        &self.psi
    }

    pub fn ring(&self) -> Ring {
        self.f.ring()
    }

    pub fn rank(&self) -> usize {
        self.phi.rows()
    }

    pub fn degree(&self) -> u32 {
        self.f.homogeneous_degree().expect("checked in new")
    }

    pub fn verify(&self) -> VerificationReport {
        let mut witness = None;
        let mut note = |v: Violation| {
            if witness.is_none() {
                witness = Some(v);
            }
        };

        let mut products_ok = true;
        for (side, a, b) in [
            (Side::PhiPsi, &self.phi, &self.psi),
            (Side::PsiPhi, &self.psi, &self.phi),
        ] {
            let prod = a.product(b).expect("shapes checked in new");
            'scan: for (j, row) in prod.iter().enumerate() {
                for (i, p) in row.iter().enumerate() {
                    let expected = if i == j {
                        self.f.clone()
                    } else {
                        self.ring().zero()
                    };
                    if *p != expected {
                        products_ok = false;
                        note(Violation::Product {
                            side,
                            row: j,
                            col: i,
                            expected,
                            actual: p.clone(),
                        });
                        break 'scan;
                    }
                }
            }
        }

        let d = self.degree() as i64;
        let mut graded_ok = true;
        if self.phi.source() != self.psi.target() {
            graded_ok = false;
            note(Violation::Twists {
                detail: format!(
                    "phi source twists {:?} differ from psi target twists {:?}",
                    self.phi.source().twists(),
                    self.psi.target().twists()
                ),
            });
        } else if self.psi.source() != &self.phi.target().shifted(-d) {
            graded_ok = false;
            note(Violation::Twists {
                detail: format!(
                    "psi source twists {:?} should be phi target twists {:?} shifted by {d}",
                    self.psi.source().twists(),
                    self.phi.target().twists()
                ),
            });
        }
        for (side, m) in [(Side::Phi, &self.phi), (Side::Psi, &self.psi)] {
            if let Some(v) = m.grading_violation() {
                graded_ok = false;
                note(Violation::Grading { side, violation: v });
            }
        }

        let mut reduced_ok = true;
        for (side, m) in [(Side::Phi, &self.phi), (Side::Psi, &self.psi)] {
            if let Some((row, col)) = m.unit_entry() {
                reduced_ok = false;
                note(Violation::Unit {
                    side,
                    row,
                    col,
                    entry: m.entry(row, col).clone(),
                });
            }
        }

        VerificationReport {
            products_ok,
            graded_ok,
            reduced_ok,
            witness,
        }
    }

    /// The same matrices over a ring with more variables.
    pub fn extend_variables(&self, new_count: usize) -> Result<Self> {
        MatrixFactorization::new(
            self.f.extend_variables(new_count)?,
            self.phi.extend_variables(new_count)?,
            self.psi.extend_variables(new_count)?,
        )
    }

    /// The pair `(psi, phi)`, a factorization with the roles exchanged.
    pub fn swapped(&self) -> Result<Self> {
        let d = self.degree() as i64;
        let phi = GradedMatrix::new(
            self.ring(),
            self.psi.source().clone(),
            self.psi.target().clone(),
            self.psi.entries().to_vec(),
        )?;
        let psi = GradedMatrix::new(
            self.ring(),
            self.phi.source().shifted(-d),
            self.phi.target().shifted(-d),
            self.phi.entries().to_vec(),
        )?;
        MatrixFactorization::new(self.f.clone(), phi, psi)
    }
}

#[cfg(test)]
mod tests;
