use proptest::prelude::*;

use super::*;
use crate::field::Field;
use crate::linalg;
use crate::poly::{Monomial, VarNames};

fn parse(names: &VarNames, s: &str) -> Polynomial {
    names.parse(s, Field::Rational).unwrap()
}

fn quadric(s: usize) -> StrengthDecomposition {
    let ring = Ring::rational(2 * s + 2);
    StrengthDecomposition::new(
        (0..=s).map(|i| ring.var(i)).collect(),
        (0..=s).map(|i| ring.var(s + 1 + i)).collect(),
    )
    .unwrap()
}

fn mixed_pair() -> (VarNames, [Polynomial; 4]) {
    let n = VarNames::default_names(5);
    let ps = [
        parse(&n, "z0 + 2*z1"),
        parse(&n, "z2^2 - z3*z4"),
        parse(&n, "3*z0 - z3"),
        parse(&n, "z1^2 + z4^2"),
    ];
    (n, ps)
}

#[test]
fn intro_pair_verifies_with_det_f() {
    let (_, [g0, h0, g1, h1]) = mixed_pair();
    let mf = two_term_mf(&g0, &h0, &g1, &h1).unwrap();
    let report = mf.verify();
    assert!(report.passed(), "{report:?}");
    assert_eq!(determinant(mf.phi()).unwrap(), *mf.f());
    let (r, c) = mcm_rank_of(&mf).unwrap();
    assert_eq!(r, 1);
    assert!(c.is_one());
}

#[test]
fn sign_flip_is_caught() {
    let (_, [g0, h0, g1, h1]) = mixed_pair();
    let mf = two_term_mf(&g0, &h0, &g1, &h1).unwrap();
    let bad_phi = mf.phi().with_entry(0, 1, g1.clone()).unwrap();
    let bad = MatrixFactorization::new(mf.f().clone(), bad_phi, mf.psi().clone()).unwrap();
    let report = bad.verify();
    assert!(!report.products_ok);
    assert!(report.graded_ok && report.reduced_ok);
    match report.witness {
        Some(Violation::Product { side, row, col, .. }) => {
            assert_eq!(side, Side::PhiPsi);
            assert_eq!((row, col), (0, 0));
        }
        other => panic!("unexpected witness {other:?}"),
    }
}

#[test]
fn unit_entry_is_not_reduced() {
    let n = VarNames::default_names(2);
    let f = parse(&n, "z0*z1");
    let ring = f.ring();
    let phi = GradedMatrix::new(
        ring,
        GradedFreeModule::new(vec![2]).unwrap(),
        GradedFreeModule::new(vec![0]).unwrap(),
        vec![vec![f.clone()]],
    )
    .unwrap();
    let psi = GradedMatrix::new(
        ring,
        GradedFreeModule::new(vec![2]).unwrap(),
        GradedFreeModule::new(vec![2]).unwrap(),
        vec![vec![ring.one()]],
    )
    .unwrap();
    let report = MatrixFactorization::new(f, phi, psi).unwrap().verify();
    assert!(report.products_ok && report.graded_ok);
    assert!(!report.reduced_ok);
    assert!(matches!(report.witness, Some(Violation::Unit { side: Side::Psi, .. })));
}

#[test]
fn bad_twists_are_reported() {
    let mf = knorrer_build(&quadric(1)).unwrap();
    let phi = GradedMatrix::new(
        mf.ring(),
        mf.phi().source().clone(),
        GradedFreeModule::new(vec![0, 1]).unwrap(),
        mf.phi().entries().to_vec(),
    )
    .unwrap();
    let report = MatrixFactorization::new(mf.f().clone(), phi, mf.psi().clone())
        .unwrap()
        .verify();
    assert!(report.products_ok);
    assert!(!report.graded_ok);
}

#[test]
fn knorrer_base_case() {
    let d = quadric(0);
    let mf = knorrer_build(&d).unwrap();
    assert_eq!(mf.rank(), 1);
    assert_eq!(mf.phi().entry(0, 0), &d.gs()[0]);
    assert_eq!(mf.psi().entry(0, 0), &d.hs()[0]);
    assert!(mf.verify().passed());
}

#[test]
fn knorrer_one_step_matches_block_formula() {
    let (_, [g0, h0, g1, h1]) = mixed_pair();
    let d = StrengthDecomposition::new(vec![g0.clone(), g1.clone()], vec![h0.clone(), h1.clone()])
        .unwrap();
    let mf = knorrer_build(&d).unwrap();
    assert!(mf.verify().passed());
    let want_phi = vec![vec![g0.clone(), g1.clone()], vec![h1.clone(), -&h0]];
    let want_psi = vec![vec![h0.clone(), g1.clone()], vec![h1.clone(), -&g0]];
    assert_eq!(mf.phi().entries(), &want_phi[..]);
    assert_eq!(mf.psi().entries(), &want_psi[..]);
    // the block form has det = -f; the intro pair differs by a sign change
    assert_eq!(determinant(mf.phi()).unwrap(), -mf.f());
}

#[test]
fn knorrer_quadrics_rank_and_det() {
    for s in 0..=3 {
        let d = quadric(s);
        let mf = knorrer_build(&d).unwrap();
        assert!(mf.verify().passed(), "s = {s}");
        assert_eq!(mf.rank(), 1 << s);
        if s >= 1 {
            let (r, c) = mcm_rank_of(&mf).unwrap();
            assert_eq!(r, 1 << (s - 1));
            assert!(c.is_unit_sign(), "c = {c}");
        }
    }
}

#[test]
fn tensor_step_unrolls_recursion() {
    let (_, [g0, h0, g1, h1]) = mixed_pair();
    let base = knorrer_build(&StrengthDecomposition::new(vec![g0.clone()], vec![h0.clone()]).unwrap())
        .unwrap();
    let stepped = tensor_step(&base, &g1, &h1).unwrap();
    let built = knorrer_build(&StrengthDecomposition::new(vec![g0, g1], vec![h0, h1]).unwrap())
        .unwrap();
    assert_eq!(stepped, built);
    assert_eq!(stepped.rank(), 2 * base.rank());
}

#[test]
fn tensor_step_rejects_wrong_degree() {
    let mf = knorrer_build(&quadric(1)).unwrap();
    let ring = mf.ring();
    assert!(matches!(
        tensor_step(&mf, &ring.var(0), &(&ring.var(1) * &ring.var(2))),
        Err(Error::DegreeMismatch(_))
    ));
}

#[test]
fn determinant_edge_cases() {
    let ring = Ring::rational(2);
    let id = GradedMatrix::identity(ring, GradedFreeModule::free(3).unwrap());
    assert!(determinant(&id).unwrap().is_one());
    let big = GradedMatrix::identity(ring, GradedFreeModule::free(17).unwrap());
    assert_eq!(
        determinant(&big),
        Err(Error::RankCap { rank: 17, cap: 16 })
    );
}

#[test]
fn randomized_check() {
    let ring = Ring::rational(3);
    let f = &ring.var(0) * &ring.var(1);
    let id = GradedMatrix::identity(ring, GradedFreeModule::free(3).unwrap());
    assert!(randomized_det_check(&id, &f, 0, 5, 1).unwrap());
    let zeroed = id.with_entry(1, 1, ring.zero()).unwrap();
    assert!(!randomized_det_check(&zeroed, &f, 0, 5, 1).unwrap());

    let mf = knorrer_build(&quadric(3)).unwrap();
    assert!(randomized_det_check(mf.phi(), mf.f(), 4, 6, 7).unwrap());
    assert!(!randomized_det_check(mf.phi(), mf.f(), 3, 6, 7).unwrap());

    // f vanishes everywhere over F_2 for z0^2*z1 + z0*z1^2
    let r2 = Ring::new(2, Field::Prime(2));
    let g = &(&(&r2.var(0) * &r2.var(0)) * &r2.var(1)) + &(&r2.var(0) * &(&r2.var(1) * &r2.var(1)));
    let id2 = GradedMatrix::identity(r2, GradedFreeModule::free(1).unwrap());
    assert!(matches!(
        randomized_det_check(&id2, &g, 0, 3, 0),
        Err(Error::ResampleExhausted { .. })
    ));
}

#[test]
fn rank_one_of_reducible_is_refused() {
    let ring = Ring::rational(2);
    let d = StrengthDecomposition::new(vec![ring.var(0)], vec![ring.var(1)]).unwrap();
    let mf = knorrer_build(&d).unwrap();
    assert!(mf.verify().passed());
    assert_eq!(mcm_rank_of(&mf), Err(Error::NotPowerOfF));
}

#[test]
fn adjugate_two_by_two() {
    let mf = adjugate_mf(2).unwrap();
    let n = VarNames::new(["x11", "x12", "x21", "x22"]).unwrap();
    let p = |s: &str| n.parse(s, Field::Rational).unwrap();
    assert_eq!(mf.f(), &p("x11*x22 - x12*x21"));
    let want = vec![vec![p("x22"), p("-x12")], vec![p("-x21"), p("x11")]];
    assert_eq!(mf.psi().entries(), &want[..]);
}

#[test]
fn adjugate_factorizations() {
    for n in 2..=4 {
        let mf = adjugate_mf(n).unwrap();
        assert!(mf.verify().passed(), "n = {n}");
        assert_eq!(mf.rank(), n);
        assert_eq!(mcm_rank_of(&mf).unwrap().0, 1);
    }
    assert!(adjugate_mf(1).is_err());
    assert!(adjugate_mf(6).is_err());
}

#[test]
fn pfaffian_four() {
    let mf = pfaffian_mf(4).unwrap();
    let n = VarNames::new(["x12", "x13", "x14", "x23", "x24", "x34"]).unwrap();
    assert_eq!(
        mf.f(),
        &n.parse("x12*x34 - x13*x24 + x14*x23", Field::Rational).unwrap()
    );
    // oracle: expand M P directly
    let prod = linalg::mat_mul(mf.phi().entries(), mf.psi().entries(), mf.ring());
    for (i, row) in prod.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if i == j {
                assert_eq!(e, mf.f());
            } else {
                assert!(e.is_zero());
            }
        }
    }
    assert!(mf.verify().passed());
}

#[test]
fn pfaffian_six_is_rank_six_cubic() {
    let mf = pfaffian_mf(6).unwrap();
    assert!(mf.verify().passed());
    assert_eq!(mf.rank(), 6);
    assert_eq!(mf.degree(), 3);
    assert_eq!(mf.f().num_terms(), 15);
    // det M = Pf^2
    let (r, c) = mcm_rank_of(&mf).unwrap();
    assert_eq!(r, 2);
    assert!(c.is_one());
    assert!(pfaffian_mf(5).is_err());
    assert!(pfaffian_mf(8).is_err());
}

#[test]
fn swapped_pair_verifies() {
    let (_, [g0, h0, g1, h1]) = mixed_pair();
    let mf = knorrer_build(&StrengthDecomposition::new(vec![g0, g1], vec![h0, h1]).unwrap())
        .unwrap();
    assert!(mf.swapped().unwrap().verify().passed());
}

fn f2_ring(n: usize) -> Ring {
    Ring::new(n, Field::Prime(2))
}

#[test]
fn search_finds_product() {
    let ring = f2_ring(4);
    let f = &ring.var(0) * &ring.var(2);
    let mf = search_reduced_mf(&f, 1, &SearchPattern::uniform(1, 1))
        .unwrap()
        .expect("x0*y0 is reducible");
    assert!(mf.verify().passed());
    assert_eq!(mf.phi().entry(0, 0), &ring.var(0));
    assert_eq!(mf.psi().entry(0, 0), &ring.var(2));
}

// every product of two linear forms over F_2 in 4 variables
fn all_linear_products(ring: Ring) -> Vec<Polynomial> {
    let linear = |mask: u32| -> Polynomial {
        (0..4)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| ring.var(i))
            .sum()
    };
    let mut out = Vec::new();
    for a in 1..16 {
        for b in 1..16 {
            out.push(&linear(a) * &linear(b));
        }
    }
    out
}

#[test]
fn search_rank_one_quadric_absent() {
    let ring = f2_ring(4);
    let q = &(&ring.var(0) * &ring.var(2)) + &(&ring.var(1) * &ring.var(3));
    assert!(!all_linear_products(ring).contains(&q));
    for k in 0..=2 {
        let hit = search_reduced_mf(&q, 1, &SearchPattern::uniform(1, k)).unwrap();
        assert!(hit.is_none(), "pattern degree {k}");
    }
}

#[test]
fn search_rank_two_quadric_found() {
    let ring = f2_ring(4);
    let q = &(&ring.var(0) * &ring.var(2)) + &(&ring.var(1) * &ring.var(3));
    let mf = search_reduced_mf(&q, 2, &SearchPattern::uniform(2, 1))
        .unwrap()
        .expect("Knorrer gives a rank 2 factorization");
    assert!(mf.verify().passed());
    assert_eq!(mf.rank(), 2);
}

#[test]
fn search_preconditions() {
    let q = Ring::rational(2).var(0);
    assert!(matches!(
        search_reduced_mf(&q, 1, &SearchPattern::uniform(1, 1)),
        Err(Error::SearchPrecondition(_))
    ));
    let r = Ring::new(4, Field::Prime(3));
    let f = &r.var(0) * &r.var(1);
    // rank 2 with cubic entries: 4 * 20 coefficients over F_3
    assert!(matches!(
        search_reduced_mf(&f, 2, &SearchPattern::uniform(2, 3)),
        Err(Error::SearchBudget { .. })
    ));
    assert!(search_reduced_mf(&f, 3, &SearchPattern::uniform(3, 1)).is_err());
    let p: SearchPattern = "0,0/1,1".parse().unwrap();
    assert_eq!(p, SearchPattern::uniform(2, 1));
    assert_eq!(p.to_string(), "0,0/1,1");
    assert!("0,0".parse::<SearchPattern>().is_err());
}

// homogeneous polynomial of the given degree with a few small coefficients
fn form(nvars: usize, degree: u32) -> impl Strategy<Value = Polynomial> {
    let ring = Ring::rational(nvars);
    let monos = Monomial::all_of_degree(nvars, degree);
    let k = monos.len();
    prop::collection::vec((0..k, -3i64..=3), 1..4).prop_map(move |picks| {
        Polynomial::from_terms(
            ring,
            picks
                .into_iter()
                .map(|(i, c)| (monos[i].clone(), ring.field.from_i64(c))),
        )
    })
}

fn decomposition(nvars: usize, d: u32, summands: usize) -> impl Strategy<Value = StrengthDecomposition> {
    let pair = (1..d).prop_flat_map(move |a| (form(nvars, a), form(nvars, d - a)));
    prop::collection::vec(pair, summands..=summands).prop_filter_map("degenerate", |pairs| {
        let (gs, hs): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        StrengthDecomposition::new(gs, hs).ok().filter(|d| !d.f().is_zero())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn knorrer_always_verifies(d in (2u32..=4, 1usize..=3).prop_flat_map(|(d, s)| decomposition(4, d, s))) {
        let mf = knorrer_build(&d).unwrap();
        prop_assert!(mf.verify().passed());
        prop_assert_eq!(mf.rank(), 1 << d.s());
        let dphi = determinant(mf.phi()).unwrap();
        let dpsi = determinant(mf.psi()).unwrap();
        prop_assert_eq!(&dphi * &dpsi, mf.f().pow(mf.rank() as u32));
        if d.s() >= 1 {
            prop_assert_eq!(dphi.clone(), dpsi);
            let want = mf.f().pow(1 << (d.s() - 1));
            prop_assert!(dphi == want || dphi == -&want);
        }
    }

    #[test]
    fn tensor_step_preserves_verification(
        d in decomposition(4, 3, 2),
        g in form(4, 1),
        h in form(4, 2),
    ) {
        let mf = knorrer_build(&d).unwrap();
        prop_assume!(!(mf.f() + &(&g * &h)).is_zero() && !g.is_zero() && !h.is_zero());
        let out = tensor_step(&mf, &g, &h).unwrap();
        prop_assert!(out.verify().passed());
    }

    #[test]
    fn extension_keeps_verification(d in decomposition(3, 3, 2), extra in 1usize..4) {
        let mf = knorrer_build(&d).unwrap();
        let big = mf.extend_variables(3 + extra).unwrap();
        prop_assert!(big.verify().passed());
        prop_assert_eq!(
            knorrer_build(&d.extend_variables(3 + extra).unwrap()).unwrap(),
            big
        );
    }

    #[test]
    fn adjugate_identity(entries in prop::collection::vec(form(3, 1), 9)) {
        let ring = Ring::rational(3);
        let m: Vec<Vec<Polynomial>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let adj = linalg::adjugate(&m, ring);
        let det = linalg::det_cofactor(&m, ring);
        for prod in [linalg::mat_mul(&m, &adj, ring), linalg::mat_mul(&adj, &m, ring)] {
            for (i, row) in prod.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    if i == j {
                        prop_assert_eq!(e, &det);
                    } else {
                        prop_assert!(e.is_zero());
                    }
                }
            }
        }
    }
}
