//! Gröbner bases over Q through prime fields.
//!
//! The reduced basis is computed modulo several primes, coefficients are
//! combined by CRT and lifted by rational reconstruction, and the lift `G`
//! is accepted only after an exact check over Q: every generator reduces to
//! zero modulo `G` and every S-polynomial of `G` does too.
//!
//! For homogeneous ideals this check is a proof. Reducing mod `p` can only
//! lower the rank of each graded piece of `I`, so the Hilbert function of
//! `R/I_p` dominates that of `R/I`. A verified `G` with the leading
//! monomials of `G_p` generates an ideal containing `I` whose quotient has
//! the Hilbert function of `R/I_p`, hence `<G> = I`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::groebner::{buchberger, sort_terms, Terms, TermOrder};
use crate::field::{Field, Scalar, MAX_PRIME};
use crate::poly::{Monomial, Polynomial, Ring};

/// Primes tried before falling back to Buchberger over Q.
const MAX_PRIMES: usize = 256;

/// Supports of a basis: the key under which residues of different primes
/// can be combined.
type Shape = Vec<Vec<Monomial>>;

struct Accumulator {
    primes: usize,
    next_attempt: usize,
    modulus: BigInt,
    residues: Vec<Vec<BigInt>>,
    last_lift: Option<Vec<Terms>>,
}

pub(super) fn modular_basis(ring: Ring, generators: &[Polynomial], order: TermOrder) -> Option<Vec<Terms>> {
    let gens: Vec<&Polynomial> = generators.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Some(Vec::new());
    }
    let gens_q: Vec<Terms> = gens.iter().map(|g| sort_terms(g, order)).collect();
    let mut groups: HashMap<Shape, Accumulator> = HashMap::new();

    for p in primes().take(MAX_PRIMES) {
        let field = Field::Prime(p);
        let Some(gens_p) = gens
            .iter()
            .map(|g| reduce_mod(g, field))
            .collect::<Option<Vec<Polynomial>>>()
        else {
            continue;
        };
        let basis_p = buchberger(&gens_p, order);
        if basis_p.len() == 1 && basis_p[0][0].0.is_one() {
            // R/I_p vanishes in every degree, so R/I does too
            return Some(vec![vec![(Monomial::one(ring.nvars), Field::Rational.one())]]);
        }
        let shape: Shape = basis_p
            .iter()
            .map(|t| t.iter().map(|(m, _)| m.clone()).collect())
            .collect();
        let acc = groups.entry(shape.clone()).or_insert_with(|| Accumulator {
            primes: 0,
            next_attempt: 1,
            modulus: BigInt::one(),
            residues: shape.iter().map(|t| vec![BigInt::zero(); t.len()]).collect(),
            last_lift: None,
        });
        combine(acc, &basis_p, p);
        acc.primes += 1;
        // reconstruction is attempted on a geometric schedule
        if acc.primes < acc.next_attempt {
            continue;
        }
        acc.next_attempt = acc.primes + 1 + acc.primes / 2;
        let Some(lift) = reconstruct(acc, &shape) else {
            continue;
        };
        // verify only once the lift has stopped changing
        if acc.last_lift.as_ref() == Some(&lift) && verify(&lift, &gens_q, order) {
            return Some(lift);
        }
        acc.last_lift = Some(lift);
    }
    None
}

/// Primes below `2^31`, largest first.
fn primes() -> impl Iterator<Item = u32> {
    (2..MAX_PRIME).rev().filter(|&p| Field::prime(p).is_ok())
}

/// The image of a rational polynomial in `F_p`, or `None` when `p` divides a denominator.
fn reduce_mod(g: &Polynomial, field: Field) -> Option<Polynomial> {
    let ring = Ring::new(g.nvars(), field);
    let mut terms = Vec::with_capacity(g.num_terms());
    for (m, c) in g.terms() {
        let q = c.as_rational().expect("rational coefficients");
        terms.push((m.clone(), field.from_fraction(q.numer(), q.denom()).ok()?));
    }
    Some(Polynomial::from_terms(ring, terms))
}

fn residue(c: &Scalar) -> u32 {
    match c {
        Scalar::Mod { value, .. } => *value,
        Scalar::Rational(_) => unreachable!("prime field basis"),
    }
}

/// Chinese remaindering of the new residues into the accumulator.
fn combine(acc: &mut Accumulator, basis: &[Terms], p: u32) {
    let p_big = BigInt::from(p);
    let m = acc.modulus.clone();
    // a + m * ((c - a) / m mod p)
    let m_mod_p = m.mod_floor(&p_big).to_u64().expect("residue fits");
    let inv = mod_inverse(m_mod_p, p as u64);
    for (acc_poly, poly) in acc.residues.iter_mut().zip(basis) {
        for (a, (_, c)) in acc_poly.iter_mut().zip(poly) {
            let a_mod_p = a.mod_floor(&p_big).to_u64().expect("residue fits");
            let diff = (residue(c) as u64 + p as u64 - a_mod_p) % p as u64;
            let t = diff * inv % p as u64;
            *a += &m * BigInt::from(t);
        }
    }
    acc.modulus = m * p_big;
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime and a is nonzero mod p
    let mut result = 1u64;
    let (mut base, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn reconstruct(acc: &Accumulator, shape: &Shape) -> Option<Vec<Terms>> {
    shape
        .iter()
        .zip(&acc.residues)
        .map(|(monos, res)| {
            monos
                .iter()
                .zip(res)
                .map(|(m, r)| {
                    let q = rational_reconstruction(r, &acc.modulus)?;
                    Some((m.clone(), Scalar::Rational(q)))
                })
                .collect::<Option<Terms>>()
        })
        .collect()
}

/// The fraction `a/b` with `a = b r mod m` and `|a|, b <= sqrt(m/2)`, if any.
pub(crate) fn rational_reconstruction(r: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, s1))
}

type IntTerms = Vec<(Monomial, BigInt)>;

/// Primitive integer multiple of a rational polynomial.
fn primitive(t: &Terms) -> IntTerms {
    let den = t.iter().fold(BigInt::one(), |acc, (_, c)| {
        acc.lcm(c.as_rational().expect("rational").denom())
    });
    let ints: IntTerms = t
        .iter()
        .map(|(m, c)| {
            let q = c.as_rational().expect("rational");
            (m.clone(), q.numer() * (&den / q.denom()))
        })
        .collect();
    remove_content(ints)
}

fn remove_content(mut t: IntTerms) -> IntTerms {
    let g = t.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for (_, c) in t.iter_mut() {
            *c /= &g;
        }
    }
    t
}

/// `a * p - b * m * g`, merged in `order`.
fn combine_int(
    p: impl IntoIterator<Item = (Monomial, BigInt)>,
    a: &BigInt,
    b: &BigInt,
    m: &Monomial,
    g: &[(Monomial, BigInt)],
    order: TermOrder,
) -> IntTerms {
    let scale = |c: BigInt| if a.is_one() { c } else { c * a };
    let mut p = p.into_iter().peekable();
    let mut out = Vec::with_capacity(p.size_hint().0 + g.len());
    for (gm, gc) in g {
        let gm = gm.mul(m);
        let gc = -(gc * b);
        while p.peek().is_some_and(|(pm, _)| order.cmp(pm, &gm) == std::cmp::Ordering::Greater) {
            let (pm, pc) = p.next().expect("peeked");
            out.push((pm, scale(pc)));
        }
        match p.peek() {
            Some((pm, _)) if *pm == gm => {
                let (pm, pc) = p.next().expect("peeked");
                let v = scale(pc) + gc;
                if !v.is_zero() {
                    out.push((pm, v));
                }
            }
            _ => out.push((gm, gc)),
        }
    }
    out.extend(p.map(|(pm, pc)| (pm, scale(pc))));
    out
}

/// Whether `h` top-reduces to zero. A leading term outside the leading
/// ideal can never be cancelled, so top reduction decides.
fn reduces_to_zero(mut h: IntTerms, basis: &[IntTerms], order: TermOrder) -> bool {
    let mut steps = 0u32;
    while let Some((m, c)) = h.first() {
        let Some(g) = basis.iter().find(|g| g[0].0.divides(m)) else {
            return false;
        };
        let q = g[0].0.quotient_of(m);
        let d = g[0].1.gcd(c);
        let (a, b) = (&g[0].1 / &d, c / &d);
        let mut it = h.into_iter();
        it.next();
        h = combine_int(it, &a, &b, &q, &g[1..], order);
        steps += 1;
        if steps % 4 == 0 {
            h = remove_content(h);
        }
    }
    true
}

/// Exact membership and S-pair checks over Q, done fraction-free.
fn verify(basis: &[Terms], gens: &[Terms], order: TermOrder) -> bool {
    let ints: Vec<IntTerms> = basis.iter().map(primitive).collect();
    if gens.iter().any(|g| !reduces_to_zero(primitive(g), &ints, order)) {
        return false;
    }
    for i in 0..ints.len() {
        for j in i + 1..ints.len() {
            let (a, b) = (&ints[i][0].0, &ints[j][0].0);
            if a.is_coprime(b) {
                continue;
            }
            // chain criterion: a k with lm_k | lcm and both partial lcms
            // strictly smaller gives the pair a standard representation by
            // induction on the lcm
            let lcm = a.lcm(b);
            let chained = ints.iter().enumerate().any(|(k, t)| {
                let c = &t[0].0;
                k != i && k != j && c.divides(&lcm) && a.lcm(c) != lcm && b.lcm(c) != lcm
            });
            if chained {
                continue;
            }
            if !reduces_to_zero(s_polynomial_int(&ints[i], &ints[j], order), &ints, order) {
                return false;
            }
        }
    }
    true
}

fn s_polynomial_int(f: &IntTerms, g: &IntTerms, order: TermOrder) -> IntTerms {
    let lcm = f[0].0.lcm(&g[0].0);
    let fm = f[0].0.quotient_of(&lcm);
    let gm = g[0].0.quotient_of(&lcm);
    let d = f[0].1.gcd(&g[0].1);
    let (a, b) = (&g[0].1 / &d, &f[0].1 / &d);
    let ff = f[1..].iter().map(|(m, c)| (m.mul(&fm), c.clone()));
    combine_int(ff, &a, &b, &gm, &g[1..], order)
}
