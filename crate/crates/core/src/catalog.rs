//! Generators for the standard example families and a seeded sampler of
//! random strength decompositions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::det_cofactor;
use crate::mf::{adjugate_mf, generic_matrix, pfaffian, pfaffian_mf, skew_matrix, MatrixFactorization, StrengthDecomposition};
use crate::poly::{Monomial, Polynomial, Ring, VarNames};

pub const DEFAULT_SEED: u64 = 0x6d66_6b69_74;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub vars: VarNames,
    pub f: Polynomial,
    pub decomposition: Option<StrengthDecomposition>,
    /// A known factorization, when the family comes with one.
    pub mf: Option<MatrixFactorization>,
    pub provenance: String,
}

impl CatalogEntry {
    fn from_decomposition(name: String, vars: VarNames, d: StrengthDecomposition, provenance: &str) -> Self {
        CatalogEntry {
            name,
            vars,
            f: d.f().clone(),
            decomposition: Some(d),
            mf: None,
            provenance: provenance.to_string(),
        }
    }

    /// Every ingredient viewed in a ring with `extra` more variables.
    pub fn extend_variables(&self, extra: usize) -> Result<CatalogEntry> {
        let n = self.vars.len() + extra;
        Ok(CatalogEntry {
            name: self.name.clone(),
            vars: self.vars.extended(n),
            f: self.f.extend_variables(n)?,
            decomposition: self
                .decomposition
                .as_ref()
                .map(|d| d.extend_variables(n))
                .transpose()?,
            mf: self.mf.as_ref().map(|m| m.extend_variables(n)).transpose()?,
            provenance: self.provenance.clone(),
        })
    }
}

/// `z_0^d + ... + z_n^d` in `n + 1` variables.
pub fn power_sum(d: u32, n: usize) -> Result<Polynomial> {
    if d == 0 {
        return Err(Error::OutOfRange {
            what: "d",
            value: 0,
            allowed: "d >= 1",
        });
    }
    let ring = Ring::rational(n + 1);
    Ok((0..=n).map(|i| ring.var(i).pow(d)).sum())
}

pub fn power_sum_entry(d: u32, n: usize) -> Result<CatalogEntry> {
    if d < 2 {
        return Err(Error::DegreeTooLow { min: 2 });
    }
    let f = power_sum(d, n)?;
    let ring = f.ring();
    let decomp = StrengthDecomposition::new(
        (0..=n).map(|i| ring.var(i)).collect(),
        (0..=n).map(|i| ring.var(i).pow(d - 1)).collect(),
    )?;
    Ok(CatalogEntry::from_decomposition(
        format!("power-sum(d={d},n={n})"),
        VarNames::default_names(n + 1),
        decomp,
        "power sum z_0^d + ... + z_n^d, smooth in characteristic 0",
    ))
}

/// `x_0 y_0 + ... + x_s y_s` in variables `x_0..x_s, y_0..y_s`.
pub fn standard_quadric(s: usize) -> (StrengthDecomposition, VarNames) {
    let ring = Ring::rational(2 * s + 2);
    let names = VarNames::new(
        (0..=s)
            .map(|i| format!("x{i}"))
            .chain((0..=s).map(|i| format!("y{i}"))),
    )
    .expect("valid names");
    let d = StrengthDecomposition::new(
        (0..=s).map(|i| ring.var(i)).collect(),
        (0..=s).map(|i| ring.var(s + 1 + i)).collect(),
    )
    .expect("valid quadric");
    (d, names)
}

pub fn quadric_entry(s: usize) -> CatalogEntry {
    let (d, names) = standard_quadric(s);
    CatalogEntry::from_decomposition(
        format!("quadric(s={s})"),
        names,
        d,
        "split quadric of rank 2s+2, strength s",
    )
}

/// `sum_i x_i g_i` where `g_i = sum_j y_{i,j}^(d-1)` uses its own block of
/// `n + 1` variables. Variables: `x_0..x_s`, then `y{i}_{j}` block by block.
pub fn disjoint_blocks(d: u32, s: usize, n: usize) -> Result<(StrengthDecomposition, VarNames)> {
    if d < 2 {
        return Err(Error::DegreeTooLow { min: 2 });
    }
    let nvars = (s + 1) + (s + 1) * (n + 1);
    let ring = Ring::rational(nvars);
    // index of y_{i,j}
    let offset = |i: usize, j: usize| (s + 1) + i * (n + 1) + j;
    let names = VarNames::new(
        (0..=s)
            .map(|i| format!("x{i}"))
            .chain((0..=s).flat_map(|i| (0..=n).map(move |j| format!("y{i}_{j}")))),
    )?;
    let gs = (0..=s).map(|i| ring.var(i)).collect();
    let hs = (0..=s)
        .map(|i| (0..=n).map(|j| ring.var(offset(i, j)).pow(d - 1)).sum())
        .collect();
    Ok((StrengthDecomposition::new(gs, hs)?, names))
}

pub fn disjoint_blocks_entry(d: u32, s: usize, n: usize) -> Result<CatalogEntry> {
    let (decomp, names) = disjoint_blocks(d, s, n)?;
    Ok(CatalogEntry::from_decomposition(
        format!("disjoint-blocks(d={d},s={s},n={n})"),
        names,
        decomp,
        "sum of x_i times power sums in disjoint variable blocks; s = e(F) + 1",
    ))
}

fn matrix_names(n: usize) -> VarNames {
    VarNames::new((1..=n).flat_map(|i| (1..=n).map(move |j| format!("x{i}{j}")))).expect("valid names")
}

/// Determinant of the generic `n x n` matrix with its top-row Laplace
/// decomposition (`n` summands) and the adjugate factorization of rank `n`.
pub fn generic_matrix_det(n: usize) -> Result<CatalogEntry> {
    if !(2..=4).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            allowed: "2 <= n <= 4",
        });
    }
    let ring = Ring::rational(n * n);
    let m = generic_matrix(n, ring);
    let mut gs = Vec::new();
    let mut hs = Vec::new();
    for j in 0..n {
        let minor: Vec<Vec<Polynomial>> = (1..n)
            .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c].clone()).collect())
            .collect();
        let cof = det_cofactor(&minor, ring);
        gs.push(m[0][j].clone());
        hs.push(if j % 2 == 0 { cof } else { -&cof });
    }
    let decomp = StrengthDecomposition::new(gs, hs)?;
    let mf = adjugate_mf(n)?;
    Ok(CatalogEntry {
        name: format!("generic-det(n={n})"),
        vars: matrix_names(n),
        f: decomp.f().clone(),
        decomposition: Some(decomp),
        mf: Some(mf),
        provenance: "determinant of a generic matrix; the matrix and its adjugate factor it with rank n".into(),
    })
}

/// Pfaffian of the generic skew-symmetric `n x n` matrix, with its first-row
/// expansion and the rank `n` factorization.
pub fn pfaffian_entry(n: usize) -> Result<CatalogEntry> {
    let mf = pfaffian_mf(n)?;
    let ring = mf.ring();
    let m = skew_matrix(n, ring);
    let mut gs = Vec::new();
    let mut hs = Vec::new();
    for j in 1..n {
        let rest: Vec<usize> = (1..n).filter(|&k| k != j).collect();
        let sub: Vec<Vec<Polynomial>> = rest
            .iter()
            .map(|&r| rest.iter().map(|&c| m[r][c].clone()).collect())
            .collect();
        let p = pfaffian(&sub, ring);
        gs.push(m[0][j].clone());
        hs.push(if j % 2 == 1 { p } else { -&p });
    }
    let decomp = StrengthDecomposition::new(gs, hs)?;
    debug_assert_eq!(decomp.f(), mf.f());
    let names = VarNames::new((1..=n).flat_map(|i| (i + 1..=n).map(move |j| format!("x{i}{j}"))))?;
    Ok(CatalogEntry {
        name: format!("pfaffian(n={n})"),
        vars: names,
        f: decomp.f().clone(),
        decomposition: Some(decomp),
        mf: Some(mf),
        provenance: "Pfaffian of a generic skew-symmetric matrix; the matrix is part of a rank n factorization".into(),
    })
}

/// `z0*z1^5 + z2^2*z3^4 + z4^3*z5^3`, a sextic with a decomposition of type (1, 2, 3).
pub fn mixed_type_entry() -> CatalogEntry {
    let ring = Ring::rational(6);
    let z = |i: usize| ring.var(i);
    let d = StrengthDecomposition::new(
        vec![z(0), z(2).pow(2), z(4).pow(3)],
        vec![z(1).pow(5), z(3).pow(4), z(5).pow(3)],
    )
    .expect("valid decomposition");
    CatalogEntry::from_decomposition(
        "mixed-type".into(),
        VarNames::default_names(6),
        d,
        "monomial sextic with a strength decomposition of type (1, 2, 3)",
    )
}

/// `g_1 g_6 + g_2 g_5 + g_3 g_4` with `g_k` the degree-`k` power sum in
/// `n + 1` variables: strength 2, secondary strength growing with `n`.
pub fn power_sum_products(n: usize) -> Result<CatalogEntry> {
    let g = |k: u32| power_sum(k, n);
    let d = StrengthDecomposition::new(vec![g(1)?, g(2)?, g(3)?], vec![g(6)?, g(5)?, g(4)?])?;
    Ok(CatalogEntry::from_decomposition(
        format!("power-sum-products(n={n})"),
        VarNames::default_names(n + 1),
        d,
        "degree-7 sum of products of power sums; strength 2, large secondary strength",
    ))
}

/// Random coefficient: nonzero in `[-3, 3]` over Q, nonzero uniform over `F_p`.
fn random_coefficient<R: Rng>(field: Field, rng: &mut R) -> Scalar {
    match field {
        Field::Rational => {
            let v = *[-3i64, -2, -1, 1, 2, 3].choose(rng).expect("nonempty");
            field.from_i64(v)
        }
        Field::Prime(p) => field.from_i64(rng.gen_range(1..p as i64)),
    }
}

fn random_form<R: Rng>(ring: Ring, degree: u32, terms: usize, rng: &mut R) -> Polynomial {
    let monos = Monomial::all_of_degree(ring.nvars, degree);
    let picked: Vec<&Monomial> = monos.choose_multiple(rng, terms.min(monos.len())).collect();
    Polynomial::from_terms(
        ring,
        picked
            .into_iter()
            .map(|m| (m.clone(), random_coefficient(ring.field, rng))),
    )
}

/// Seeded random decomposition of type `mu` and degree `d` in `n + 1`
/// variables. Each factor has `terms` distinct monomials (sparse factors
/// keep determinants and Gröbner bases small).
pub fn sample_type_mu(
    mu: &[u32],
    d: u32,
    n: usize,
    seed: u64,
    field: Field,
    terms: usize,
) -> Result<StrengthDecomposition> {
    if mu.is_empty() {
        return Err(Error::EmptyInput("mu needs at least one entry"));
    }
    if mu[0] < 1 || mu.windows(2).any(|w| w[0] > w[1]) || mu[mu.len() - 1] > d / 2 {
        return Err(Error::InvalidDecomposition(format!(
            "type {mu:?} must satisfy 1 <= mu_0 <= ... <= mu_s <= {}",
            d / 2
        )));
    }
    if terms == 0 {
        return Err(Error::OutOfRange {
            what: "terms",
            value: 0,
            allowed: "terms >= 1",
        });
    }
    let ring = Ring::new(n + 1, field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let gs: Vec<Polynomial> = mu.iter().map(|&a| random_form(ring, a, terms, &mut rng)).collect();
        let hs: Vec<Polynomial> = mu
            .iter()
            .map(|&a| random_form(ring, d - a, terms, &mut rng))
            .collect();
        let decomp = StrengthDecomposition::new(gs, hs)?;
        if !decomp.f().is_zero() {
            return Ok(decomp);
        }
    }
}

pub fn sample_entry(mu: &[u32], d: u32, n: usize, seed: u64, field: Field, terms: usize) -> Result<CatalogEntry> {
    let decomp = sample_type_mu(mu, d, n, seed, field, terms)?;
    Ok(CatalogEntry::from_decomposition(
        format!("sample(mu={mu:?},d={d},n={n},seed={seed})"),
        VarNames::default_names(n + 1),
        decomp,
        "seeded random decomposition (heuristically generic)",
    ))
}

/// A fixed list of entries covering every family at small size.
pub fn standard_catalog() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for s in 0..=3 {
        out.push(quadric_entry(s));
    }
    for n in 2..=4 {
        out.push(power_sum_entry(3, n)?);
    }
    out.push(power_sum_entry(4, 2)?);
    out.push(disjoint_blocks_entry(3, 0, 1)?);
    out.push(disjoint_blocks_entry(3, 1, 2)?);
    for n in 2..=4 {
        out.push(generic_matrix_det(n)?);
    }
    out.push(pfaffian_entry(4)?);
    out.push(pfaffian_entry(6)?);
    out.push(mixed_type_entry());
    out.push(power_sum_products(2)?);
    out.push(sample_entry(&[1, 2], 4, 4, DEFAULT_SEED, Field::Rational, 2)?);
    out.push(sample_entry(&[1, 1], 3, 4, DEFAULT_SEED, Field::Rational, 2)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mf::knorrer_build;

    #[test]
    fn power_sum_examples() {
        let n = VarNames::default_names(3);
        assert_eq!(n.format(&power_sum(2, 1).unwrap()), "z0^2 + z1^2");
        assert_eq!(n.format(&power_sum(3, 2).unwrap()), "z0^3 + z1^3 + z2^3");
    }

    #[test]
    fn quadric_shapes() {
        let (d, names) = standard_quadric(0);
        assert_eq!(names.format(d.f()), "x0*y0");
        let (d, names) = standard_quadric(1);
        assert_eq!(names.format(d.f()), "x0*y0 + x1*y1");
        assert_eq!(names.names(), ["x0", "x1", "y0", "y1"]);
    }

    #[test]
    fn disjoint_blocks_example() {
        let (d, names) = disjoint_blocks(3, 1, 2).unwrap();
        assert_eq!(names.len(), 2 + 6);
        let want = names
            .parse(
                "x0*y0_0^2 + x0*y0_1^2 + x0*y0_2^2 + x1*y1_0^2 + x1*y1_1^2 + x1*y1_2^2",
                Field::Rational,
            )
            .unwrap();
        assert_eq!(d.f(), &want);
        let (small, _) = disjoint_blocks(2, 0, 1).unwrap();
        assert_eq!(small.degree(), 2);
    }

    #[test]
    fn generic_det_laplace_matches_adjugate() {
        for n in 2..=4 {
            let e = generic_matrix_det(n).unwrap();
            let d = e.decomposition.as_ref().unwrap();
            assert_eq!(d.s() + 1, n);
            assert_eq!(e.mf.as_ref().unwrap().f(), d.f());
        }
        let e = generic_matrix_det(2).unwrap();
        assert_eq!(e.vars.format(&e.f), "-x12*x21 + x11*x22");
    }

    #[test]
    fn pfaffian_expansion_matches() {
        for n in [4, 6] {
            let e = pfaffian_entry(n).unwrap();
            assert_eq!(e.decomposition.as_ref().unwrap().f(), e.mf.as_ref().unwrap().f());
            assert_eq!(e.decomposition.as_ref().unwrap().s() + 1, n - 1);
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = sample_type_mu(&[1, 2, 3], 7, 6, 11, Field::Rational, 2).unwrap();
        let b = sample_type_mu(&[1, 2, 3], 7, 6, 11, Field::Rational, 2).unwrap();
        let c = sample_type_mu(&[1, 2, 3], 7, 6, 12, Field::Rational, 2).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.mu(), vec![1, 2, 3]);
        assert_eq!(a.degree(), 7);
        let q = sample_type_mu(&[1], 2, 3, 5, Field::Prime(5), 3).unwrap();
        assert_eq!(q.mu(), vec![1]);
        assert!(sample_type_mu(&[2, 1], 4, 3, 0, Field::Rational, 2).is_err());
        assert!(sample_type_mu(&[3], 4, 3, 0, Field::Rational, 2).is_err());
    }

    #[test]
    fn catalog_sums_and_builds() {
        for e in standard_catalog().unwrap() {
            let d = e.decomposition.as_ref().unwrap();
            assert_eq!(d.f(), &e.f, "{}", e.name);
            assert_eq!(e.vars.len(), e.f.nvars(), "{}", e.name);
            if d.s() <= 4 {
                assert!(knorrer_build(d).unwrap().verify().passed(), "{}", e.name);
            }
        }
    }
}
