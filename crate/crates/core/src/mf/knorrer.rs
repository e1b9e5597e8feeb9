use super::{GradedFreeModule, GradedMatrix, MatrixFactorization, StrengthDecomposition};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Rank `2^s` factorization of `f = sum g_i h_i`, built by doubling from
/// `((g_0), (h_0))`.
pub fn knorrer_build(d: &StrengthDecomposition) -> Result<MatrixFactorization> {
    if d.f().is_zero() {
        return Err(Error::InvalidDecomposition("the summands cancel to zero".into()));
    }
    let ring = d.ring();
    let (g0, h0) = (&d.gs()[0], &d.hs()[0]);
    let deg_g = g0.homogeneous_degree().expect("validated") as i64;
    let degree = d.degree() as i64;
    let mut alpha = GradedMatrix::new(
        ring,
        GradedFreeModule::new(vec![deg_g])?,
        GradedFreeModule::new(vec![0])?,
        vec![vec![g0.clone()]],
    )?;
    let mut beta = GradedMatrix::new(
        ring,
        GradedFreeModule::new(vec![degree])?,
        GradedFreeModule::new(vec![deg_g])?,
        vec![vec![h0.clone()]],
    )?;
    let mut f = g0 * h0;
    for (g, h) in d.gs().iter().zip(d.hs()).skip(1) {
        (alpha, beta) = double(&alpha, &beta, g, h, degree)?;
        f = &f + &(g * h);
    }
    MatrixFactorization::new(f, alpha, beta)
}

/// Factorization of `f + g h` of twice the rank.
pub fn tensor_step(
    mf: &MatrixFactorization,
    g: &Polynomial,
    h: &Polynomial,
) -> Result<MatrixFactorization> {
    let d = mf.degree();
    let (Some(a), Some(b)) = (g.homogeneous_degree(), h.homogeneous_degree()) else {
        return Err(Error::DegreeMismatch(
            "g and h must be nonzero and homogeneous".into(),
        ));
    };
    if a + b != d {
        return Err(Error::DegreeMismatch(format!(
            "deg g + deg h = {} but deg f = {d}",
            a + b
        )));
    }
    mf.f().check_ring(g)?;
    mf.f().check_ring(h)?;
    let (alpha, beta) = double(mf.phi(), mf.psi(), g, h, d as i64)?;
    MatrixFactorization::new(mf.f() + &(g * h), alpha, beta)
}

// alpha' = [[alpha, g], [h, -beta]], beta' = [[beta, g], [h, -alpha]]
fn double(
    alpha: &GradedMatrix,
    beta: &GradedMatrix,
    g: &Polynomial,
    h: &Polynomial,
    degree: i64,
) -> Result<(GradedMatrix, GradedMatrix)> {
    let ring = alpha.ring();
    let deg_g = g.homogeneous_degree().map_or(0, i64::from);
    let deg_h = h.homogeneous_degree().map_or(0, i64::from);
    let f_prev = alpha.target();
    let g_prev = alpha.source();
    let f_new = f_prev.direct_sum(&g_prev.shifted(deg_h));
    let g_new = g_prev.direct_sum(&f_prev.shifted(-deg_g));
    let alpha_new = GradedMatrix::new(
        ring,
        g_new.clone(),
        f_new.clone(),
        blocks(alpha.entries(), &beta.negated(), g, h),
    )?;
    let beta_new = GradedMatrix::new(
        ring,
        f_new.shifted(-degree),
        g_new,
        blocks(beta.entries(), &alpha.negated(), g, h),
    )?;
    Ok((alpha_new, beta_new))
}

fn blocks(
    top_left: &[Vec<Polynomial>],
    bottom_right: &GradedMatrix,
    g: &Polynomial,
    h: &Polynomial,
) -> Vec<Vec<Polynomial>> {
    let n = top_left.len();
    let ring = g.ring();
    let diag = |p: &Polynomial, j: usize, i: usize| if i == j { p.clone() } else { ring.zero() };
    let mut rows = Vec::with_capacity(2 * n);
    for (j, row) in top_left.iter().enumerate() {
        let mut r = row.clone();
        r.extend((0..n).map(|i| diag(g, j, i)));
        rows.push(r);
    }
    for (j, row) in bottom_right.entries().iter().enumerate() {
        let mut r: Vec<Polynomial> = (0..n).map(|i| diag(h, j, i)).collect();
        r.extend(row.iter().cloned());
        rows.push(r);
    }
    rows
}

/// The 2x2 pair `[[g0, -g1], [h1, h0]]`, `[[h0, g1], [-h1, g0]]` for
/// `f = g0 h0 + g1 h1`; here `det(phi) = f`.
pub fn two_term_mf(
    g0: &Polynomial,
    h0: &Polynomial,
    g1: &Polynomial,
    h1: &Polynomial,
) -> Result<MatrixFactorization> {
    let d = StrengthDecomposition::new(
        vec![g0.clone(), g1.clone()],
        vec![h0.clone(), h1.clone()],
    )?;
    let degree = d.degree() as i64;
    let deg = |p: &Polynomial| p.homogeneous_degree().expect("validated") as i64;
    let ring = g0.ring();
    let f_mod = GradedFreeModule::new(vec![0, deg(g0) - deg(h1)])?;
    let g_mod = GradedFreeModule::new(vec![deg(g0), deg(g1)])?;
    let phi = GradedMatrix::new(
        ring,
        g_mod.clone(),
        f_mod.clone(),
        vec![vec![g0.clone(), -g1], vec![h1.clone(), h0.clone()]],
    )?;
    let psi = GradedMatrix::new(
        ring,
        f_mod.shifted(-degree),
        g_mod,
        vec![vec![h0.clone(), g1.clone()], vec![-h1, g0.clone()]],
    )?;
    MatrixFactorization::new(d.f().clone(), phi, psi)
}
