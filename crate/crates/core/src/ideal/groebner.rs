//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use super::modular::modular_basis;
use crate::field::{Field, Scalar};
use crate::poly::{Monomial, Polynomial, Ring};

/// Term order used inside the ideal engine. Polynomials themselves are
/// always stored in grevlex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    #[default]
    GRevLex,
    Lex,
}

impl TermOrder {
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::GRevLex => a.grevlex_cmp(b),
            TermOrder::Lex => a.lex_cmp(b),
        }
    }
}

pub(super) type Terms = Vec<(Monomial, Scalar)>;

pub(super) fn sort_terms(p: &Polynomial, order: TermOrder) -> Terms {
    let mut t = p.terms().to_vec();
    if order != TermOrder::GRevLex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

fn make_monic(t: &mut Terms) {
    if let Some(inv) = t.first().map(|(_, c)| c.inv().expect("nonzero")) {
        if !inv.is_one() {
            for (_, c) in t.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
}

/// `p - c * m * g`, merged in `order`. Terms of `p` are moved, not cloned.
fn sub_mul(
    p: impl IntoIterator<Item = (Monomial, Scalar)>,
    c: &Scalar,
    m: &Monomial,
    g: &[(Monomial, Scalar)],
    order: TermOrder,
) -> Terms {
    let neg = -c;
    let mut p = p.into_iter().peekable();
    let mut out = Vec::with_capacity(p.size_hint().0 + g.len());
    for (gm, gc) in g {
        let gm = gm.mul(m);
        let gc = gc * &neg;
        while p.peek().is_some_and(|(pm, _)| order.cmp(pm, &gm) == Ordering::Greater) {
            out.extend(p.next());
        }
        match p.peek() {
            Some((pm, _)) if *pm == gm => {
                let (pm, pc) = p.next().expect("peeked");
                let v = &pc + &gc;
                if !v.is_zero() {
                    out.push((pm, v));
                }
            }
            _ => out.push((gm, gc)),
        }
    }
    out.extend(p);
    out
}

/// Full reduction of `f` by monic `basis` polynomials.
fn reduce(f: Terms, basis: &[&Terms], order: TermOrder) -> Terms {
    let mut p = f;
    // p[..start] holds the irreducible part of the remainder
    let mut start = 0;
    while start < p.len() {
        match basis.iter().find(|g| g[0].0.divides(&p[start].0)) {
            Some(g) => {
                let mut tail = p.drain(start..);
                let (m, c) = tail.next().expect("nonempty");
                let q = g[0].0.quotient_of(&m);
                let rest = sub_mul(tail, &c, &q, &g[1..], order);
                p.extend(rest);
            }
            None => start += 1,
        }
    }
    p
}

fn s_polynomial(f: &Terms, g: &Terms, order: TermOrder) -> Terms {
    let lcm = f[0].0.lcm(&g[0].0);
    let one = f[0].1.field().one();
    let fm = f[0].0.quotient_of(&lcm);
    let gm = g[0].0.quotient_of(&lcm);
    let ff = f[1..].iter().map(|(m, c)| (m.mul(&fm), c.clone()));
    sub_mul(ff, &one, &gm, &g[1..], order)
}

/// Reduced Gröbner basis: monic, auto-reduced, sorted by increasing leading
/// monomial in its term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: TermOrder,
    polys: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Basis elements as ordinary (grevlex-stored) polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.polys
            .iter()
            .map(|t| Polynomial::from_terms(self.ring, t.iter().cloned()))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|t| t[0].0.clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|t| t[0].0.is_one())
    }

    /// Remainder of multivariate division; zero iff `g` lies in the ideal.
    pub fn normal_form(&self, g: &Polynomial) -> Result<Polynomial> {
        if g.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: g.ring().to_string(),
                right: self.ring.to_string(),
            });
        }
        let refs: Vec<&Terms> = self.polys.iter().collect();
        let r = reduce(sort_terms(g, self.order), &refs, self.order);
        Ok(Polynomial::from_terms(self.ring, r))
    }

    pub fn contains(&self, g: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(g)?.is_zero())
    }

    /// Checks that every S-polynomial of basis pairs reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let refs: Vec<&Terms> = self.polys.iter().collect();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let s = s_polynomial(&self.polys[i], &self.polys[j], self.order);
                if !reduce(s, &refs, self.order).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// No leading monomial divides another term of the basis.
    pub fn is_reduced(&self) -> bool {
        self.polys.iter().enumerate().all(|(i, p)| {
            p[0].1.is_one()
                && self.polys.iter().enumerate().all(|(j, q)| {
                    i == j || p.iter().all(|(m, _)| !q[0].0.divides(m))
                })
        })
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of homogeneous `generators`. Over Q the basis is
/// computed modulo primes, lifted, and verified exactly; plain Buchberger
/// over Q is the fallback.
pub fn groebner_basis(ring: Ring, generators: &[Polynomial], order: TermOrder) -> Result<GroebnerBasis> {
    for (index, g) in generators.iter().enumerate() {
        if g.ring() != ring {
            return Err(Error::RingMismatch {
                left: g.ring().to_string(),
                right: ring.to_string(),
            });
        }
        if g.is_homogeneous().is_none() {
            return Err(Error::Inhomogeneous { index });
        }
    }
    let polys = match ring.field {
        Field::Rational => match modular_basis(ring, generators, order) {
            Some(polys) => polys,
            None => buchberger(generators, order),
        },
        Field::Prime(_) => buchberger(generators, order),
    };
    Ok(GroebnerBasis { ring, order, polys })
}

/// Plain Buchberger over the coefficient field of `ring`.
pub(super) fn buchberger(generators: &[Polynomial], order: TermOrder) -> Vec<Terms> {
    let mut arena: Vec<Terms> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Terms> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| sort_terms(g, order))
        .collect();
    // lower degrees first so early elements reduce later ones
    inputs.sort_by(|a, b| a[0].0.degree().cmp(&b[0].0.degree()));

    for f in inputs {
        let refs: Vec<&Terms> = active.iter().map(|&k| &arena[k]).collect();
        let mut h = reduce(f, &refs, order);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        insert(&mut arena, &mut active, &mut pairs, h);
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm degree, then pair indices
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&arena[pair.i], &arena[pair.j], order);
        let refs: Vec<&Terms> = active.iter().map(|&k| &arena[k]).collect();
        let mut h = reduce(s, &refs, order);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        if h[0].0.is_one() {
            return vec![h];
        }
        insert(&mut arena, &mut active, &mut pairs, h);
    }

    interreduce(active.iter().map(|&k| arena[k].clone()).collect(), order)
}

/// Gebauer–Möller update: adds `h` and its useful pairs.
fn insert(arena: &mut Vec<Terms>, active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: Terms) {
    let hk = arena.len();
    let hm = h[0].0.clone();
    arena.push(h);

    let candidates: Vec<Pair> = active
        .iter()
        .map(|&g| Pair {
            i: g,
            j: hk,
            lcm: arena[g][0].0.lcm(&hm),
        })
        .collect();

    // chain criterion among the new pairs: drop (g, h) when another new
    // pair's lcm properly divides its lcm; keep one per equal lcm
    let mut kept: Vec<Pair> = Vec::new();
    for (idx, p) in candidates.iter().enumerate() {
        let dominated = candidates.iter().enumerate().any(|(k, q)| {
            k != idx && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || k < idx)
        });
        if !dominated {
            kept.push(p.clone());
        }
    }
    // coprime leading terms: the S-polynomial reduces to zero
    kept.retain(|p| !arena[p.i][0].0.is_coprime(&hm));

    // old pairs made redundant by h
    pairs.retain(|p| {
        !(hm.divides(&p.lcm)
            && arena[p.i][0].0.lcm(&hm) != p.lcm
            && arena[p.j][0].0.lcm(&hm) != p.lcm)
    });
    pairs.extend(kept);

    active.retain(|&g| !hm.divides(&arena[g][0].0));
    active.push(hk);
}

fn interreduce(mut polys: Vec<Terms>, order: TermOrder) -> Vec<Terms> {
    polys.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Terms> = Vec::new();
    for p in polys {
        if minimal.iter().any(|q| q[0].0.divides(&p[0].0)) {
            continue;
        }
        minimal.push(p);
    }
    let n = minimal.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<&Terms> = (0..n).filter(|&j| j != i).map(|j| &minimal[j]).collect();
        let head = minimal[i][0].clone();
        let mut tail = reduce(minimal[i][1..].to_vec(), &others, order);
        let mut p = vec![head];
        p.append(&mut tail);
        make_monic(&mut p);
        out.push(p);
    }
    out
}
