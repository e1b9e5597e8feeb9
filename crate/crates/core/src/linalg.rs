//! Exact dense linear algebra over fields and polynomial rings.

use std::collections::HashMap;

use crate::field::{Field, Scalar};
use crate::poly::{Polynomial, Ring};

/// Square-matrix determinant by Laplace expansion along the top row, with
/// minors memoized by their column set.
pub fn det_cofactor(m: &[Vec<Polynomial>], ring: Ring) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    assert!(n <= 63, "cofactor expansion limited to 63 columns");
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    minor_det(m, 0, (1u64 << n) - 1, ring, &mut memo)
}

// determinant of rows `row..n` against the columns in `cols`
fn minor_det(
    m: &[Vec<Polynomial>],
    row: usize,
    cols: u64,
    ring: Ring,
    memo: &mut HashMap<u64, Polynomial>,
) -> Polynomial {
    let n = m.len();
    if row == n {
        return ring.one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = ring.zero();
    let mut sign_pos = true;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let sub = minor_det(m, row + 1, cols & !(1 << c), ring, memo);
            if !sub.is_zero() {
                let t = entry * &sub;
                acc = if sign_pos { &acc + &t } else { &acc - &t };
            }
        }
        sign_pos = !sign_pos;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Fraction-free (Bareiss) elimination. Every division is exact, so the
/// computation stays inside the polynomial ring.
pub fn det_bareiss(mut m: Vec<Vec<Polynomial>>, ring: Ring) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut prev = ring.one();
    let mut negate = false;
    for k in 0..n - 1 {
        // sparsest nonzero pivot in column k
        let pivot = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| (m[i][k].num_terms(), i));
        let Some(p) = pivot else {
            return ring.zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let a = &row[j] * &pivot_row[k];
                let num = if lead.is_zero() || pivot_row[j].is_zero() {
                    a
                } else {
                    &a - &(&lead * &pivot_row[j])
                };
                row[j] = if prev.is_one() || num.is_zero() {
                    num
                } else {
                    num.exact_divide(&prev)
                        .expect("same ring")
                        .expect("Bareiss division is exact")
                };
            }
            row[k] = ring.zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// Determinant over a field by Gaussian elimination.
pub fn det_scalar(mut m: Vec<Vec<Scalar>>, field: Field) -> Scalar {
    let n = m.len();
    let mut det = field.one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return field.zero();
        };
        if p != k {
            m.swap(p, k);
            det = -&det;
        }
        det = &det * &m[k][k];
        let inv = m[k][k].inv().expect("nonzero pivot");
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] * &inv;
            for j in k..n {
                let t = &factor * &m[k][j];
                m[i][j] = &m[i][j] - &t;
            }
        }
    }
    det
}

/// Rank over a field.
pub fn rank_scalar(mut m: Vec<Vec<Scalar>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        let inv = m[rank][c].inv().expect("nonzero pivot");
        for i in 0..rows {
            if i == rank || m[i][c].is_zero() {
                continue;
            }
            let factor = &m[i][c] * &inv;
            for j in c..cols {
                let t = &factor * &m[rank][j];
                m[i][j] = &m[i][j] - &t;
            }
        }
        rank += 1;
    }
    rank
}

/// One solution of `a x = b`, or `None` when the system is inconsistent.
pub fn solve_scalar(a: &[Vec<Scalar>], b: &[Scalar], field: Field) -> Option<Vec<Scalar>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        let inv = m[rank][c].inv().expect("nonzero pivot");
        for j in c..=cols {
            m[rank][j] = &m[rank][j] * &inv;
        }
        for i in 0..rows {
            if i == rank || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..=cols {
                let t = &factor * &m[rank][j];
                m[i][j] = &m[i][j] - &t;
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// Transpose of the cofactor matrix, so that `m adj(m) = det(m) id`.
pub fn adjugate(m: &[Vec<Polynomial>], ring: Ring) -> Vec<Vec<Polynomial>> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let minor: Vec<Vec<Polynomial>> = (0..n)
                        .filter(|&r| r != j)
                        .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c].clone()).collect())
                        .collect();
                    let d = det_cofactor(&minor, ring);
                    if (i + j) % 2 == 0 {
                        d
                    } else {
                        -&d
                    }
                })
                .collect()
        })
        .collect()
}

/// Plain matrix product of polynomial matrices.
pub fn mat_mul(a: &[Vec<Polynomial>], b: &[Vec<Polynomial>], ring: Ring) -> Vec<Vec<Polynomial>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    let mut acc = ring.zero();
                    for k in 0..inner {
                        if row[k].is_zero() || b[k][j].is_zero() {
                            continue;
                        }
                        acc = &acc + &(&row[k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
