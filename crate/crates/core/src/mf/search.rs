use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{GradedFreeModule, GradedMatrix, MatrixFactorization};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::solve_scalar;
use crate::poly::{Monomial, Polynomial, Ring};

/// Largest coefficient space (as a power of two) the search will enumerate.
pub const SEARCH_BUDGET_LOG2: u32 = 30;

/// Twists of `F` and `G` for a candidate `phi: G -> F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchPattern {
    pub f_twists: Vec<i64>,
    pub g_twists: Vec<i64>,
}

impl SearchPattern {
    pub fn new(f_twists: Vec<i64>, g_twists: Vec<i64>) -> Self {
        SearchPattern { f_twists, g_twists }
    }

    /// All twists of `F` zero and of `G` equal to `k`: `phi` has entries of degree `k`.
    pub fn uniform(rank: usize, k: i64) -> Self {
        SearchPattern::new(vec![0; rank], vec![k; rank])
    }
}

/// `"0,0/1,1"` means `F` twists `[0, 0]` and `G` twists `[1, 1]`.
impl FromStr for SearchPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_list = |part: &str| -> Result<Vec<i64>> {
            part.split(',')
                .map(|t| {
                    t.trim().parse::<i64>().map_err(|_| {
                        Error::SearchPrecondition(format!("bad twist '{}' in pattern '{s}'", t.trim()))
                    })
                })
                .collect()
        };
        let Some((a, b)) = s.split_once('/') else {
            return Err(Error::SearchPrecondition(format!(
                "pattern '{s}' must look like F-twists/G-twists, e.g. 0,0/1,1"
            )));
        };
        Ok(SearchPattern::new(parse_list(a)?, parse_list(b)?))
    }
}

impl fmt::Display for SearchPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}/{}", join(&self.f_twists), join(&self.g_twists))
    }
}

struct Slot {
    row: usize,
    col: usize,
    mono: Monomial,
}

/// Exhaustive search for a reduced factorization `(phi, psi)` of `f` with the
/// given twists: every coefficient choice for `phi` is tried in a fixed
/// order and `psi` is solved for linearly. Returns the first hit.
pub fn search_reduced_mf(
    f: &Polynomial,
    rank: usize,
    pattern: &SearchPattern,
) -> Result<Option<MatrixFactorization>> {
    let ring = f.ring();
    let p = match ring.field {
        Field::Prime(p) if p <= 3 => p,
        other => {
            return Err(Error::SearchPrecondition(format!(
                "search runs over F_2 or F_3, not {other}"
            )))
        }
    };
    if ring.nvars > 4 {
        return Err(Error::SearchPrecondition(format!(
            "at most 4 variables, got {}",
            ring.nvars
        )));
    }
    if rank == 0 || rank > 2 {
        return Err(Error::SearchPrecondition(format!("rank must be 1 or 2, got {rank}")));
    }
    if pattern.f_twists.len() != rank || pattern.g_twists.len() != rank {
        return Err(Error::SearchPrecondition(format!(
            "pattern {pattern} does not have {rank} twists on each side"
        )));
    }
    let Some(d) = f.homogeneous_degree() else {
        return Err(Error::SearchPrecondition("f must be nonzero and homogeneous".into()));
    };
    let d = d as i64;
    let (ft, gt) = (&pattern.f_twists, &pattern.g_twists);

    // phi entry (j, i) has degree G_i - F_j; nonpositive degrees are forced to zero
    let mut slots = Vec::new();
    for j in 0..rank {
        for i in 0..rank {
            let deg = gt[i] - ft[j];
            if deg >= 1 {
                for mono in Monomial::all_of_degree(ring.nvars, deg as u32) {
                    slots.push(Slot { row: j, col: i, mono });
                }
            }
        }
    }
    let size_log2 = (slots.len() as f64 * (p as f64).log2()).ceil() as u32;
    if size_log2 > SEARCH_BUDGET_LOG2 {
        return Err(Error::SearchBudget {
            size_log2,
            budget_log2: SEARCH_BUDGET_LOG2,
        });
    }

    let f_mod = GradedFreeModule::new(ft.clone())?;
    let g_mod = GradedFreeModule::new(gt.clone())?;
    let psi_source = f_mod.shifted(-d);
    let field = ring.field;
    let scalars: Vec<Scalar> = (0..p as i64).map(|v| field.from_i64(v)).collect();
    let mut digits = vec![0u32; slots.len()];

    loop {
        let phi = build_phi(ring, rank, &slots, &digits, &scalars);
        if nondegenerate(&phi) {
            if let Some(psi) = solve_psi(&phi, f, ft, gt, d) {
                let mf = MatrixFactorization::new(
                    f.clone(),
                    GradedMatrix::new(ring, g_mod.clone(), f_mod.clone(), phi)?,
                    GradedMatrix::new(ring, psi_source.clone(), g_mod.clone(), psi)?,
                )?;
                if mf.verify().passed() {
                    return Ok(Some(mf));
                }
            }
        }
        // advance the mixed-radix counter, first slot fastest
        let mut k = 0;
        loop {
            if k == digits.len() {
                return Ok(None);
            }
            digits[k] += 1;
            if digits[k] < p {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

fn build_phi(
    ring: Ring,
    rank: usize,
    slots: &[Slot],
    digits: &[u32],
    scalars: &[Scalar],
) -> Vec<Vec<Polynomial>> {
    let mut terms: Vec<Vec<Vec<(Monomial, Scalar)>>> = vec![vec![Vec::new(); rank]; rank];
    for (slot, &dg) in slots.iter().zip(digits) {
        if dg != 0 {
            terms[slot.row][slot.col].push((slot.mono.clone(), scalars[dg as usize].clone()));
        }
    }
    terms
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|t| Polynomial::from_terms(ring, t))
                .collect()
        })
        .collect()
}

// a zero row or column makes phi singular, so no psi exists
fn nondegenerate(phi: &[Vec<Polynomial>]) -> bool {
    let n = phi.len();
    (0..n).all(|j| phi[j].iter().any(|p| !p.is_zero()))
        && (0..n).all(|i| phi.iter().any(|row| !row[i].is_zero()))
}

/// Solves `phi psi = f id` column by column for reduced graded `psi`.
fn solve_psi(
    phi: &[Vec<Polynomial>],
    f: &Polynomial,
    ft: &[i64],
    gt: &[i64],
    d: i64,
) -> Option<Vec<Vec<Polynomial>>> {
    let ring = f.ring();
    let field = ring.field;
    let n = phi.len();
    let mut psi = vec![vec![ring.zero(); n]; n];
    for j in 0..n {
        // unknowns: coefficients of psi_(i, j), degree F_j + d - G_i
        let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
        for i in 0..n {
            let deg = ft[j] + d - gt[i];
            if deg >= 1 {
                for m in Monomial::all_of_degree(ring.nvars, deg as u32) {
                    unknowns.push((i, m));
                }
            }
        }
        // equations: coefficient of each monomial in row k of phi * psi_col
        let mut eq_index: HashMap<(usize, Monomial), usize> = HashMap::new();
        let mut columns: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(unknowns.len());
        for (i, m) in &unknowns {
            let mut col = Vec::new();
            for k in 0..n {
                for (pm, pc) in phi[k][*i].terms() {
                    let key = (k, pm.mul(m));
                    let next = eq_index.len();
                    let e = *eq_index.entry(key).or_insert(next);
                    col.push((e, pc.clone()));
                }
            }
            columns.push(col);
        }
        let mut rhs_terms = Vec::new();
        for (m, c) in f.terms() {
            let next = eq_index.len();
            let e = *eq_index.entry((j, m.clone())).or_insert(next);
            rhs_terms.push((e, c.clone()));
        }
        let rows = eq_index.len();
        let mut a = vec![vec![field.zero(); unknowns.len()]; rows];
        for (u, col) in columns.iter().enumerate() {
            for (e, c) in col {
                a[*e][u] = &a[*e][u] + c;
            }
        }
        let mut b = vec![field.zero(); rows];
        for (e, c) in rhs_terms {
            b[e] = &b[e] + &c;
        }
        let x = solve_scalar(&a, &b, field)?;
        let mut per_row: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); n];
        for ((i, m), c) in unknowns.into_iter().zip(x) {
            if !c.is_zero() {
                per_row[i].push((m, c));
            }
        }
        for (i, t) in per_row.into_iter().enumerate() {
            psi[i][j] = Polynomial::from_terms(ring, t);
        }
    }
    Some(psi)
}
