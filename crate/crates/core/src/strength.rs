//! Strength invariants: singular-locus codimension and `e(f)`, Jacobian-minor
//! certificates for collective strength, and exact strength of quadrics.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{jacobian_minors_ideal, Ideal};
use crate::linalg::rank_scalar;
use crate::mf::StrengthDecomposition;
use crate::poly::Polynomial;

/// A lower bound that may be `+inf` (linear forms admit no decomposition).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StrengthBound {
    Finite(i64),
    Infinite,
}

impl StrengthBound {
    pub fn finite(self) -> Option<i64> {
        match self {
            StrengthBound::Finite(v) => Some(v),
            StrengthBound::Infinite => None,
        }
    }
}

impl fmt::Display for StrengthBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrengthBound::Finite(v) => write!(f, "{v}"),
            StrengthBound::Infinite => write!(f, "inf"),
        }
    }
}

/// `2^k` rounded up to an integer, so negative `k` gives 1.
pub fn pow2_ceil(k: i64) -> u64 {
    if k <= 0 {
        1
    } else {
        1u64 << k.min(63)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityProfile {
    pub f: Polynomial,
    pub degree: u32,
    /// Codimension of `<df/dz_i> + <f>` in the polynomial ring.
    pub jacobian_codim: usize,
    /// Codimension of the singular locus inside the hypersurface.
    pub sing_codim: usize,
    pub e: i64,
    pub strength_lower: i64,
}

impl SingularityProfile {
    /// `2^(e+1)`, the conjectured lower bound on the rank of a reduced factorization.
    pub fn mf_threshold(&self) -> u64 {
        pow2_ceil(self.e + 1)
    }

    /// `2^e`, rounded up.
    pub fn mcm_threshold(&self) -> u64 {
        pow2_ceil(self.e)
    }
}

fn check_form(f: &Polynomial, min_degree: u32) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let Some(d) = f.homogeneous_degree() else {
        return Err(Error::Inhomogeneous { index: 0 });
    };
    if d < min_degree {
        return Err(Error::DegreeTooLow { min: min_degree });
    }
    Ok(d)
}

pub fn singularity_profile(f: &Polynomial) -> Result<SingularityProfile> {
    let degree = check_form(f, 2)?;
    let mut gens = f.gradient();
    gens.push(f.clone());
    let jacobian_codim = Ideal::new(f.ring(), gens)?.codimension()?;
    // f itself lies in the ideal, so the codimension is at least 1
    let sing_codim = jacobian_codim - 1;
    let sing = sing_codim as i64;
    Ok(SingularityProfile {
        f: f.clone(),
        degree,
        jacobian_codim,
        sing_codim,
        e: (sing - 2).div_euclid(2),
        strength_lower: sing.div_euclid(2),
    })
}

/// Certificate for the forms of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCertificate {
    pub degree: u32,
    pub size: usize,
    /// `None` when the minors generate the unit ideal.
    pub minors_codim: Option<usize>,
    pub bound: StrengthBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthCertificate {
    pub polys: Vec<Polynomial>,
    pub blocks: Vec<BlockCertificate>,
    /// Minors codimension of the block that attains the bound.
    pub minors_codim: Option<usize>,
    pub certified_collective_lower: StrengthBound,
}

/// Lower bound on the collective strength of `fs`: for each degree, the
/// ideal of maximal minors of the Jacobian of the forms of that degree has
/// codimension `c`, and every nonzero combination has strength at least
/// `ceil(c/2) - 1`. The certificate is the minimum over degrees.
pub fn collective_strength_certificate(fs: &[Polynomial]) -> Result<StrengthCertificate> {
    if fs.is_empty() {
        return Err(Error::EmptyInput("collective strength needs at least one form"));
    }
    let mut by_degree: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
    for (index, f) in fs.iter().enumerate() {
        f.check_ring(&fs[0])?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = f.homogeneous_degree().ok_or(Error::Inhomogeneous { index })?;
        if d == 0 {
            return Err(Error::DegreeTooLow { min: 1 });
        }
        by_degree.entry(d).or_default().push(f.clone());
    }
    let nvars = fs[0].nvars();
    let mut blocks = Vec::new();
    for (degree, group) in by_degree {
        let size = group.len();
        let minors_codim = if size > nvars {
            // Jacobian rank is at most nvars, so every maximal minor vanishes
            Some(0)
        } else {
            let ideal = jacobian_minors_ideal(&group, size)?;
            if ideal.is_unit()? {
                None
            } else {
                Some(ideal.codimension()?)
            }
        };
        let bound = match minors_codim {
            None => StrengthBound::Infinite,
            Some(c) => StrengthBound::Finite((c as i64 + 1).div_euclid(2) - 1),
        };
        blocks.push(BlockCertificate {
            degree,
            size,
            minors_codim,
            bound,
        });
    }
    let best = blocks
        .iter()
        .min_by_key(|b| b.bound)
        .expect("at least one block");
    Ok(StrengthCertificate {
        polys: fs.to_vec(),
        minors_codim: best.minors_codim,
        certified_collective_lower: best.bound,
        blocks,
    })
}

/// Certified lower bound on secondary strength: the collective strength
/// certificate of all factors of the decomposition.
pub fn secondary_strength_bound(d: &StrengthDecomposition) -> Result<StrengthBound> {
    Ok(collective_strength_certificate(&d.factors())?.certified_collective_lower)
}

/// Strength of a quadratic form: `ceil(rank/2) - 1` for the rank of its
/// symmetric matrix. Needs characteristic other than 2.
pub fn quadric_strength(q: &Polynomial) -> Result<u32> {
    check_form(q, 2)?;
    if q.homogeneous_degree() != Some(2) {
        return Err(Error::DegreeMismatch(format!(
            "expected a quadric, got degree {}",
            q.homogeneous_degree().unwrap_or(0)
        )));
    }
    let field = q.field();
    if field == Field::Prime(2) {
        return Err(Error::Characteristic2);
    }
    let n = q.nvars();
    let half = field.from_i64(2).inv().expect("char != 2");
    let mut b = vec![vec![field.zero(); n]; n];
    for (m, c) in q.terms() {
        let vars: Vec<usize> = m.support().collect();
        match vars[..] {
            [i] => b[i][i] = c.clone(),
            [i, j] => {
                let v = c * &half;
                b[i][j] = v.clone();
                b[j][i] = v;
            }
            _ => unreachable!("degree-2 monomial"),
        }
    }
    let rho = rank_scalar(b) as u32;
    Ok(rho.div_ceil(2) - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub s: usize,
    pub e: i64,
    /// `s >= e + 1`.
    pub holds: bool,
    pub mf_threshold: u64,
    pub mcm_threshold: u64,
    pub profile: SingularityProfile,
}

pub fn e_s_gap_check(d: &StrengthDecomposition) -> Result<GapReport> {
    if d.f().is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let profile = singularity_profile(d.f())?;
    let s = d.s();
    Ok(GapReport {
        s,
        e: profile.e,
        holds: s as i64 >= profile.e + 1,
        mf_threshold: profile.mf_threshold(),
        mcm_threshold: profile.mcm_threshold(),
        profile,
    })
}
