use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{GradedMatrix, MatrixFactorization};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg;
use crate::poly::Polynomial;

pub const COFACTOR_MAX_RANK: usize = 6;
pub const BAREISS_MAX_RANK: usize = 16;

/// Exact determinant: cofactor expansion up to rank 6, fraction-free
/// elimination up to rank 16, refused beyond.
pub fn determinant(m: &GradedMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n <= COFACTOR_MAX_RANK {
        Ok(linalg::det_cofactor(m.entries(), m.ring()))
    } else if n <= BAREISS_MAX_RANK {
        Ok(linalg::det_bareiss(m.entries().to_vec(), m.ring()))
    } else {
        Err(Error::RankCap {
            rank: n,
            cap: BAREISS_MAX_RANK,
        })
    }
}

// integer box for sample points over Q
const SAMPLE_BOUND: i64 = 1 << 20;

/// Tests `det M(p) = c f(p)^r` at `trials` seeded random points with `f(p) != 0`,
/// for one scalar `c != 0` fixed by the first such point.
pub fn randomized_det_check(
    m: &GradedMatrix,
    f: &Polynomial,
    r: u32,
    trials: usize,
    seed: u64,
) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    f.check_ring(&m.ring().zero())?;
    let ring = m.ring();
    let field = ring.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = 20 * trials.max(1) + 100;
    let mut c: Option<Scalar> = None;
    let mut done = 0;
    let mut attempts = 0;
    while done < trials {
        if attempts == budget {
            return Err(Error::ResampleExhausted { attempts });
        }
        attempts += 1;
        let point: Vec<Scalar> = (0..ring.nvars)
            .map(|_| field.random(&mut rng, SAMPLE_BOUND))
            .collect();
        let fp = f.evaluate(&point)?;
        if fp.is_zero() {
            continue;
        }
        let det = linalg::det_scalar(m.evaluate(&point)?, field);
        let power = fp.pow(r as u64);
        match &c {
            None => {
                let ratio = &det * &power.inv().expect("nonzero");
                if ratio.is_zero() {
                    return Ok(false);
                }
                c = Some(ratio);
            }
            Some(c) => {
                if det != c * &power {
                    return Ok(false);
                }
            }
        }
        done += 1;
    }
    Ok(true)
}

/// `(r, c)` with `det(phi) = c f^r`.
pub fn mcm_rank_of(mf: &MatrixFactorization) -> Result<(u32, Scalar)> {
    let f = mf.f();
    if f.is_constant() {
        return Err(Error::NotPowerOfF);
    }
    let mut det = determinant(mf.phi())?;
    if det.is_zero() {
        return Err(Error::NotPowerOfF);
    }
    let mut r = 0;
    while let Some(q) = det.exact_divide(f)? {
        det = q;
        r += 1;
    }
    if !det.is_constant() {
        return Err(Error::NotPowerOfF);
    }
    let c = det.constant_term();
    Ok((r, c))
}
