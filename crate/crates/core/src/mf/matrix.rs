use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg;
use crate::poly::{Polynomial, Ring};

/// `⊕ S(-a_i)`, stored as the list of twists `a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Result<Self> {
        if twists.is_empty() {
            return Err(Error::EmptyInput("a graded free module needs rank >= 1"));
        }
        Ok(GradedFreeModule { twists })
    }

    /// `S^rank` with all twists zero.
    pub fn free(rank: usize) -> Result<Self> {
        Self::new(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn twist(&self, i: usize) -> i64 {
        self.twists[i]
    }

    /// `M(k)`: every twist decreases by `k`.
    pub fn shifted(&self, k: i64) -> GradedFreeModule {
        GradedFreeModule {
            twists: self.twists.iter().map(|a| a - k).collect(),
        }
    }

    pub fn direct_sum(&self, other: &GradedFreeModule) -> GradedFreeModule {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        GradedFreeModule { twists }
    }
}

/// Map `source -> target`; entry `(j, i)` has degree
/// `source.twist(i) - target.twist(j)` when graded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    ring: Ring,
    source: GradedFreeModule,
    target: GradedFreeModule,
    entries: Vec<Vec<Polynomial>>,
}

/// An entry whose degree disagrees with the twists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingViolation {
    pub row: usize,
    pub col: usize,
    pub expected_degree: i64,
    /// `None` when the entry is not homogeneous.
    pub actual_degree: Option<u32>,
}

impl GradedMatrix {
    /// Checks shapes and rings only; grading is checked by [`Self::grading_violation`].
    pub fn new(
        ring: Ring,
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if entries.len() != target.rank() {
            return Err(Error::Shape(format!(
                "{} rows for a target of rank {}",
                entries.len(),
                target.rank()
            )));
        }
        for (j, row) in entries.iter().enumerate() {
            if row.len() != source.rank() {
                return Err(Error::Shape(format!(
                    "row {j} has {} entries for a source of rank {}",
                    row.len(),
                    source.rank()
                )));
            }
            for p in row {
                if p.ring() != ring {
                    return Err(Error::RingMismatch {
                        left: p.ring().to_string(),
                        right: ring.to_string(),
                    });
                }
            }
        }
        Ok(GradedMatrix {
            ring,
            source,
            target,
            entries,
        })
    }

    /// Identity map on `module`.
    pub fn identity(ring: Ring, module: GradedFreeModule) -> Self {
        let n = module.rank();
        let entries = (0..n)
            .map(|j| (0..n).map(|i| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        GradedMatrix {
            ring,
            source: module.clone(),
            target: module,
            entries,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    /// First entry (row-major) whose degree disagrees with the twists.
    pub fn grading_violation(&self) -> Option<GradingViolation> {
        for (j, row) in self.entries.iter().enumerate() {
            for (i, p) in row.iter().enumerate() {
                let expected = self.source.twist(i) - self.target.twist(j);
                let ok = match p.is_homogeneous() {
                    Some(h) => h.matches(expected),
                    None => false,
                };
                if !ok {
                    return Some(GradingViolation {
                        row: j,
                        col: i,
                        expected_degree: expected,
                        actual_degree: p.homogeneous_degree(),
                    });
                }
            }
        }
        None
    }

    /// First entry (row-major) with a nonzero constant term.
    pub fn unit_entry(&self) -> Option<(usize, usize)> {
        for (j, row) in self.entries.iter().enumerate() {
            for (i, p) in row.iter().enumerate() {
                if !p.in_maximal_ideal() {
                    return Some((j, i));
                }
            }
        }
        None
    }

    /// Entry-wise product `self * other` (ignores twists).
    pub fn product(&self, other: &GradedMatrix) -> Result<Vec<Vec<Polynomial>>> {
        if self.cols() != other.rows() {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(linalg::mat_mul(&self.entries, &other.entries, self.ring))
    }

    pub fn negated(&self) -> GradedMatrix {
        GradedMatrix {
            ring: self.ring,
            source: self.source.clone(),
            target: self.target.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|p| -p).collect())
                .collect(),
        }
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|p| p.evaluate(point)).collect())
            .collect()
    }

    pub fn extend_variables(&self, new_count: usize) -> Result<GradedMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| p.extend_variables(new_count))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedMatrix {
            ring: Ring::new(new_count, self.ring.field),
            source: self.source.clone(),
            target: self.target.clone(),
            entries,
        })
    }

    /// Replaces one entry; used to build perturbed inputs.
    pub fn with_entry(&self, row: usize, col: usize, p: Polynomial) -> Result<GradedMatrix> {
        let mut entries = self.entries.clone();
        *entries
            .get_mut(row)
            .and_then(|r| r.get_mut(col))
            .ok_or_else(|| Error::Shape(format!("no entry ({row}, {col})")))? = p;
        GradedMatrix::new(self.ring, self.source.clone(), self.target.clone(), entries)
    }
}
