use super::Ideal;
use crate::error::{Error, Result};
use crate::linalg::det_cofactor;
use crate::poly::Polynomial;

/// Ideal of partial derivatives for one form; for several forms, the ideal of
/// maximal minors of their Jacobian matrix.
pub fn jacobian_ideal(fs: &[Polynomial]) -> Result<Ideal> {
    match fs {
        [] => Err(Error::EmptyInput("jacobian_ideal needs at least one polynomial")),
        [f] => Ideal::new(f.ring(), f.gradient()),
        _ => jacobian_minors_ideal(fs, fs.len()),
    }
}

/// Ideal of all `r`x`r` minors of the Jacobian matrix `(d f_i / d z_j)`.
pub fn jacobian_minors_ideal(fs: &[Polynomial], r: usize) -> Result<Ideal> {
    let Some(first) = fs.first() else {
        return Err(Error::EmptyInput("jacobian_minors_ideal needs at least one polynomial"));
    };
    let ring = first.ring();
    for f in fs {
        f.check_ring(first)?;
        if f.is_homogeneous().is_none() {
            return Err(Error::Inhomogeneous {
                index: fs.iter().position(|g| g == f).unwrap_or(0),
            });
        }
    }
    let n = ring.nvars;
    if r == 0 || r > fs.len() || r > n {
        return Err(Error::OutOfRange {
            what: "minor size",
            value: r,
            allowed: "1 <= r <= min(#polys, #vars)",
        });
    }
    let jac: Vec<Vec<Polynomial>> = fs.iter().map(Polynomial::gradient).collect();
    let mut minors = Vec::new();
    for rows in subsets(fs.len(), r) {
        // skip all-zero columns early
        let cols: Vec<usize> = (0..n)
            .filter(|&j| rows.iter().any(|&i| !jac[i][j].is_zero()))
            .collect();
        if cols.len() < r {
            continue;
        }
        for cs in subsets(cols.len(), r) {
            let m: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&i| cs.iter().map(|&c| jac[i][cols[c]].clone()).collect())
                .collect();
            let d = det_cofactor(&m, ring);
            if !d.is_zero() && !minors.contains(&d) {
                minors.push(d);
            }
        }
    }
    Ideal::new(ring, minors)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
