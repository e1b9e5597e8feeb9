use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::poly::Monomial;

/// Ambient polynomial ring `k[z_0, ..., z_{n-1}]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    pub nvars: usize,
    pub field: Field,
}

impl Ring {
    pub fn new(nvars: usize, field: Field) -> Self {
        Ring { nvars, field }
    }

    pub fn rational(nvars: usize) -> Self {
        Ring::new(nvars, Field::Rational)
    }

    pub fn zero(self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(self) -> Polynomial {
        Polynomial::constant(self, self.field.one())
    }

    pub fn var(self, i: usize) -> Polynomial {
        Polynomial::var(self, i)
    }

    pub fn constant(self, c: i64) -> Polynomial {
        Polynomial::constant(self, self.field.from_i64(c))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{} vars]", self.field, self.nvars)
    }
}

/// Result of a homogeneity test on a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomogeneousDegree {
    /// The zero polynomial, compatible with every degree.
    Any,
    Exactly(u32),
}

impl HomogeneousDegree {
    pub fn matches(self, d: i64) -> bool {
        match self {
            HomogeneousDegree::Any => true,
            HomogeneousDegree::Exactly(e) => e as i64 == d,
        }
    }
}

/// Sparse polynomial: nonzero terms sorted strictly decreasing in grevlex.
/// Equal polynomials have identical term vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, c: Scalar) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars), c)
    }

    pub fn var(ring: Ring, i: usize) -> Self {
        assert!(i < ring.nvars, "variable {i} out of range");
        Self::monomial(ring, Monomial::var(ring.nvars, i), ring.field.one())
    }

    pub fn monomial(ring: Ring, m: Monomial, c: Scalar) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars);
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring,
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I>(ring: Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut v: Vec<(Monomial, Scalar)> = terms.into_iter().collect();
        v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            ring,
            terms: combine_sorted(v),
        }
    }

    /// Trusted constructor: terms already strictly decreasing and nonzero.
    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<(Monomial, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { ring, terms }
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Leading term in grevlex.
    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn constant_term(&self) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field.zero(),
        }
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> Option<HomogeneousDegree> {
        let Some((m0, _)) = self.terms.first() else {
            return Some(HomogeneousDegree::Any);
        };
        let d = m0.degree();
        self.terms
            .iter()
            .all(|(m, _)| m.degree() == d)
            .then_some(HomogeneousDegree::Exactly(d))
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.is_homogeneous() {
            Some(HomogeneousDegree::Exactly(d)) => Some(d),
            _ => None,
        }
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial::from_sorted_terms(self.ring, out)
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((ma.mul(mb), ca * cb));
            }
        }
        prods.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial::from_sorted_terms(self.ring, combine_sorted(prods))
    }

    /// `self * c * m`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(mm, cc)| {
                let v = cc * c;
                (!v.is_zero()).then(|| (mm.mul(m), v))
            })
            .collect();
        Polynomial::from_sorted_terms(self.ring, terms)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars), c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative; exponents are read in the coefficient field,
    /// so `d/dz z^p = 0` in characteristic `p`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.ring.nvars {
            return Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.ring.nvars,
            });
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(i);
            if e == 0 {
                return None;
            }
            let v = c.scale(e as u64);
            (!v.is_zero()).then(|| (m.with_exponent(i, e - 1), v))
        });
        // differentiation can reorder terms, so resort
        Ok(Polynomial::from_terms(self.ring, terms))
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars)
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.nvars {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars,
                got: point.len(),
            });
        }
        let mut acc = self.ring.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &point[k].pow(e as u64);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Same polynomial in `k[z_0..z_{new_count-1}]`.
    pub fn extend_variables(&self, new_count: usize) -> Result<Polynomial> {
        let used = self.max_variable();
        if new_count < self.ring.nvars {
            if let Some(u) = used.filter(|&u| u >= new_count) {
                return Err(Error::ShrinkBelowSupport {
                    requested: new_count,
                    used: u,
                });
            }
        }
        let ring = Ring::new(new_count, self.ring.field);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.resized(new_count), c.clone()))
            .collect();
        // appending or dropping unused trailing variables keeps grevlex order
        Ok(Polynomial::from_sorted_terms(ring, terms))
    }

    /// Renames variable `i` to `map[i]` in a ring with `nvars` variables.
    pub fn remap_variables(&self, map: &[usize], nvars: usize) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars);
        let ring = Ring::new(nvars, self.ring.field);
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.remapped(map, nvars), c.clone())),
        )
    }

    /// Highest variable index appearing in the support.
    pub fn max_variable(&self) -> Option<usize> {
        self.terms
            .iter()
            .filter_map(|(m, _)| m.highest_variable())
            .max()
    }

    /// `Some(q)` with `self = q * divisor`, or `None` if the division is not exact.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Polynomial::zero(self.ring)));
        }
        let (lm, lc) = divisor.terms[0].clone();
        let lc_inv = lc.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            if !lm.divides(m) {
                return Ok(None);
            }
            let qm = lm.quotient_of(m);
            let qc = c * &lc_inv;
            rem = rem.sub_scaled(&divisor.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        // quotient terms are produced in strictly decreasing order
        Ok(Some(Polynomial::from_sorted_terms(self.ring, quot)))
    }

    fn sub_scaled(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    /// Every term has positive degree (no constant term).
    pub fn in_maximal_ideal(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    pub fn is_linear_form(&self) -> bool {
        self.homogeneous_degree() == Some(1)
    }
}

/// Combines equal monomials in a list sorted decreasingly, dropping zeros.
fn combine_sorted(v: Vec<(Monomial, Scalar)>) -> Vec<(Monomial, Scalar)> {
    let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == m => {
                last.1 = &last.1 + &c;
            }
            _ => {
                if let Some(last) = out.last() {
                    if last.1.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if out.last().is_some_and(|t| t.1.is_zero()) {
        out.pop();
    }
    out
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial::from_sorted_terms(self.ring, terms)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(mut iter: I) -> Polynomial {
        let first = iter.next().expect("sum of an empty iterator has no ring");
        iter.fold(first, |acc, p| &acc + &p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::poly::VarNames::default_names(self.ring.nvars);
        write!(f, "{}", names.format(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarNames;
    use proptest::prelude::*;

    fn quad_ring() -> (Ring, VarNames) {
        (
            Ring::rational(4),
            VarNames::new(["x0", "x1", "y0", "y1"]).unwrap(),
        )
    }

    fn p(names: &VarNames, field: Field, s: &str) -> Polynomial {
        names.parse(s, field).unwrap()
    }

    #[test]
    fn add_examples() {
        let (r, n) = quad_ring();
        let a = p(&n, r.field, "x0*y0");
        let b = p(&n, r.field, "x1*y1");
        assert_eq!(&a + &b, p(&n, r.field, "x0*y0 + x1*y1"));
        assert_eq!(&a + &r.zero(), a);
        let sq = p(&n, r.field, "x0^2");
        assert!((&sq + &(-&sq)).is_zero());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = Ring::rational(2).var(0);
        let b = Ring::rational(3).var(0);
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::RingMismatch { .. })));
        let c = Ring::new(2, Field::Prime(5)).var(0);
        assert!(a.checked_add(&c).is_err());
    }

    #[test]
    fn mul_examples() {
        let (r, n) = quad_ring();
        let a = p(&n, r.field, "x0 + y0");
        let b = p(&n, r.field, "x0 - y0");
        assert_eq!(&a * &b, p(&n, r.field, "x0^2 - y0^2"));
        assert!((&a * &r.zero()).is_zero());
        let f2 = Field::prime(2).unwrap();
        let z = VarNames::default_names(2);
        let s = p(&z, f2, "z0 + z1");
        assert_eq!(&s * &s, p(&z, f2, "z0^2 + z1^2"));
    }

    #[test]
    fn derivative_examples() {
        let (r, n) = quad_ring();
        let q = p(&n, r.field, "x0*y0 + x1*y1");
        assert_eq!(q.partial_derivative(0).unwrap(), p(&n, r.field, "y0"));
        let z = VarNames::default_names(1);
        let f3 = Field::prime(3).unwrap();
        assert!(p(&z, f3, "z0^3").partial_derivative(0).unwrap().is_zero());
        for d in 2..7u32 {
            let f = p(&z, Field::Rational, &format!("z0^{d}"));
            let expected = p(&z, Field::Rational, &format!("{d}*z0^{}", d - 1));
            assert_eq!(f.partial_derivative(0).unwrap(), expected);
        }
        assert!(matches!(
            q.partial_derivative(4),
            Err(Error::VariableOutOfRange { index: 4, nvars: 4 })
        ));
    }

    #[test]
    fn homogeneity_examples() {
        let (r, n) = quad_ring();
        assert_eq!(
            p(&n, r.field, "x0*y0 + x1*y1").is_homogeneous(),
            Some(HomogeneousDegree::Exactly(2))
        );
        assert_eq!(p(&n, r.field, "x0 + x0^2").is_homogeneous(), None);
        assert_eq!(r.zero().is_homogeneous(), Some(HomogeneousDegree::Any));
    }

    #[test]
    fn evaluate_examples() {
        let (r, n) = quad_ring();
        let q = p(&n, r.field, "x0*y0 + x1*y1");
        let pt = |v: [i64; 4]| v.map(|x| r.field.from_i64(x)).to_vec();
        assert_eq!(q.evaluate(&pt([1, 1, 1, 1])).unwrap(), r.field.from_i64(2));
        assert!(q.evaluate(&pt([0, 0, 0, 0])).unwrap().is_zero());
        assert_eq!(q.evaluate(&pt([1, 0, 1, 0])).unwrap(), r.field.one());
        assert!(matches!(
            q.evaluate(&pt([1, 0, 1, 0])[..3]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn extend_examples() {
        let z = VarNames::default_names(1);
        let sq = p(&z, Field::Rational, "z0^2");
        let big = sq.extend_variables(5).unwrap();
        assert_eq!(big.nvars(), 5);
        assert_eq!(big.num_terms(), 1);
        assert!(Ring::rational(1).zero().extend_variables(5).unwrap().is_zero());
        let two = Ring::rational(3).var(2);
        assert!(matches!(
            two.extend_variables(2),
            Err(Error::ShrinkBelowSupport { requested: 2, used: 2 })
        ));
        assert_eq!(Ring::rational(3).var(0).extend_variables(1).unwrap().nvars(), 1);
    }

    #[test]
    fn exact_divide_examples() {
        let (r, n) = quad_ring();
        let a = p(&n, r.field, "x0^2 - y0^2");
        let b = p(&n, r.field, "x0 - y0");
        assert_eq!(a.exact_divide(&b).unwrap(), Some(p(&n, r.field, "x0 + y0")));
        assert_eq!(a.exact_divide(&a).unwrap(), Some(r.one()));
        assert_eq!(r.var(0).exact_divide(&r.var(2)).unwrap(), None);
        assert!(matches!(a.exact_divide(&r.zero()), Err(Error::DivisionByZero)));
    }

    fn arb_poly(nvars: usize, field: Field) -> impl Strategy<Value = Polynomial> {
        let ring = Ring::new(nvars, field);
        prop::collection::vec(
            (prop::collection::vec(0u16..3, nvars), -4i64..5),
            0..5,
        )
        .prop_map(move |ts| {
            Polynomial::from_terms(
                ring,
                ts.into_iter()
                    .map(|(e, c)| (Monomial::from_exponents(e), ring.field.from_i64(c))),
            )
        })
    }

    fn arb_homogeneous(nvars: usize, degree: u16) -> impl Strategy<Value = Polynomial> {
        let ring = Ring::rational(nvars);
        prop::collection::vec((prop::collection::vec(0u16..=degree, nvars), -4i64..5), 1..5)
            .prop_map(move |ts| {
                Polynomial::from_terms(
                    ring,
                    ts.into_iter().filter_map(|(e, c)| {
                        let m = Monomial::from_exponents(e);
                        (m.degree() == degree as u32).then(|| (m, ring.field.from_i64(c)))
                    }),
                )
            })
    }

    fn arb_field() -> impl Strategy<Value = Field> {
        prop_oneof![Just(Field::Rational), Just(Field::Prime(7)), Just(Field::Prime(2))]
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in arb_field().prop_flat_map(|f| (arb_poly(3, f), arb_poly(3, f), arb_poly(3, f)))) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn exact_divide_inverts_mul((a, b) in arb_field().prop_flat_map(|f| (arb_poly(3, f), arb_poly(3, f)))) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), Some(a));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(3, Field::Rational), b in arb_poly(3, Field::Rational), pt in prop::collection::vec(-3i64..4, 3)) {
            let pt: Vec<Scalar> = pt.into_iter().map(|v| Field::Rational.from_i64(v)).collect();
            let lhs = (&a * &b).evaluate(&pt).unwrap();
            let rhs = &a.evaluate(&pt).unwrap() * &b.evaluate(&pt).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!((&a + &b).evaluate(&pt).unwrap(), &a.evaluate(&pt).unwrap() + &b.evaluate(&pt).unwrap());
        }

        #[test]
        fn euler_identity(f in arb_homogeneous(3, 3)) {
            let ring = f.ring();
            let lhs = (0..3)
                .map(|i| &ring.var(i) * &f.partial_derivative(i).unwrap())
                .fold(ring.zero(), |acc, t| &acc + &t);
            prop_assert_eq!(lhs, f.scale(&ring.field.from_i64(3)));
        }

        #[test]
        fn extension_commutes(a in arb_poly(3, Field::Rational), b in arb_poly(3, Field::Rational), pt in prop::collection::vec(-3i64..4, 3)) {
            let ext = |p: &Polynomial| p.extend_variables(6).unwrap();
            prop_assert_eq!(ext(&(&a + &b)), &ext(&a) + &ext(&b));
            prop_assert_eq!(ext(&(&a * &b)), &ext(&a) * &ext(&b));
            for i in 0..3 {
                prop_assert_eq!(ext(&a.partial_derivative(i).unwrap()), ext(&a).partial_derivative(i).unwrap());
            }
            let mut pt: Vec<Scalar> = pt.into_iter().map(|v| Field::Rational.from_i64(v)).collect();
            let before = a.evaluate(&pt).unwrap();
            pt.extend((0..3).map(|_| Field::Rational.zero()));
            prop_assert_eq!(ext(&a).evaluate(&pt).unwrap(), before);
        }

        #[test]
        fn canonical_form_is_unique(a in arb_poly(3, Field::Rational)) {
            let rebuilt = Polynomial::from_terms(a.ring(), a.terms().iter().rev().cloned());
            prop_assert_eq!(&rebuilt, &a);
            prop_assert!(a.terms().iter().all(|t| !t.1.is_zero()));
        }
    }
}
