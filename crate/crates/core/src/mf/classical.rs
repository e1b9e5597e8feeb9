use super::{GradedFreeModule, GradedMatrix, MatrixFactorization};
use crate::error::{Error, Result};
use crate::linalg::{adjugate, det_cofactor};
use crate::poly::{Polynomial, Ring};

/// `n x n` matrix with entry `(i, j)` the variable `z_{i n + j}`.
pub fn generic_matrix(n: usize, ring: Ring) -> Vec<Vec<Polynomial>> {
    (0..n)
        .map(|i| (0..n).map(|j| ring.var(i * n + j)).collect())
        .collect()
}

/// Generic skew-symmetric `n x n` matrix; the entries above the diagonal are
/// the variables in row-major order.
pub fn skew_matrix(n: usize, ring: Ring) -> Vec<Vec<Polynomial>> {
    let mut m = vec![vec![ring.zero(); n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            m[i][j] = ring.var(k);
            m[j][i] = -&ring.var(k);
            k += 1;
        }
    }
    m
}

/// Pfaffian by expansion along the first row.
pub fn pfaffian(m: &[Vec<Polynomial>], ring: Ring) -> Polynomial {
    let idx: Vec<usize> = (0..m.len()).collect();
    pf_rec(m, &idx, ring)
}

fn pf_rec(m: &[Vec<Polynomial>], idx: &[usize], ring: Ring) -> Polynomial {
    match idx.len() {
        0 => ring.one(),
        n if n % 2 == 1 => ring.zero(),
        _ => {
            let first = idx[0];
            let mut acc = ring.zero();
            for (k, &j) in idx.iter().enumerate().skip(1) {
                let a = &m[first][j];
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != j).collect();
                let t = a * &pf_rec(m, &rest, ring);
                // position k (0-based) contributes (-1)^(k+1)
                acc = if k % 2 == 1 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

fn check_range(what: &'static str, n: usize, lo: usize, hi: usize, allowed: &'static str) -> Result<()> {
    if n < lo || n > hi {
        return Err(Error::OutOfRange {
            what,
            value: n,
            allowed,
        });
    }
    Ok(())
}

/// `(M, adj M)` for the generic `n x n` matrix `M`; factors `det M`.
pub fn adjugate_mf(n: usize) -> Result<MatrixFactorization> {
    check_range("n", n, 2, 5, "2 <= n <= 5")?;
    let ring = Ring::rational(n * n);
    let m = generic_matrix(n, ring);
    let f = det_cofactor(&m, ring);
    let adj = adjugate(&m, ring);
    let n_i = n as i64;
    let f_mod = GradedFreeModule::new(vec![0; n])?;
    let g_mod = GradedFreeModule::new(vec![1; n])?;
    let phi = GradedMatrix::new(ring, g_mod.clone(), f_mod.clone(), m)?;
    let psi = GradedMatrix::new(ring, f_mod.shifted(-n_i), g_mod, adj)?;
    MatrixFactorization::new(f, phi, psi)
}

/// `(M, P)` for the generic skew-symmetric `n x n` matrix `M`, where `P`
/// holds signed submaximal Pfaffians and `M P = Pf(M) id`.
pub fn pfaffian_mf(n: usize) -> Result<MatrixFactorization> {
    if n % 2 == 1 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            allowed: "even n with 4 <= n <= 6",
        });
    }
    check_range("n", n, 4, 6, "even n with 4 <= n <= 6")?;
    let ring = Ring::rational(n * (n - 1) / 2);
    let m = skew_matrix(n, ring);
    let f = pfaffian(&m, ring);
    let mut p = vec![vec![ring.zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
            let sub = pf_rec(&m, &rest, ring);
            // expansion of Pf along row i: sign (-1)^(i+j+1) for j > i and
            // (-1)^(i+j) for j < i (0-based indices)
            let negative = if j > i { (i + j) % 2 == 0 } else { (i + j) % 2 == 1 };
            p[j][i] = if negative { -&sub } else { sub };
        }
    }
    let half = (n / 2) as i64;
    let f_mod = GradedFreeModule::new(vec![0; n])?;
    let g_mod = GradedFreeModule::new(vec![1; n])?;
    let phi = GradedMatrix::new(ring, g_mod.clone(), f_mod.clone(), m)?;
    let psi = GradedMatrix::new(ring, f_mod.shifted(-half), g_mod, p)?;
    MatrixFactorization::new(f, phi, psi)
}
