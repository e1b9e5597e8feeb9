use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

/// `f = g_0 h_0 + ... + g_s h_s` with `deg g_i + deg h_i = d` and
/// `1 <= deg g_i <= deg h_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthDecomposition {
    ring: Ring,
    gs: Vec<Polynomial>,
    hs: Vec<Polynomial>,
    degree: u32,
    f: Polynomial,
}

impl StrengthDecomposition {
    /// Validates the summands and swaps each pair so that `g_i` has the
    /// smaller degree. Cancellation to `f = 0` is allowed here.
    pub fn new(gs: Vec<Polynomial>, hs: Vec<Polynomial>) -> Result<Self> {
        if gs.is_empty() {
            return Err(Error::InvalidDecomposition("no summands".into()));
        }
        if gs.len() != hs.len() {
            return Err(Error::InvalidDecomposition(format!(
                "{} g's but {} h's",
                gs.len(),
                hs.len()
            )));
        }
        let ring = gs[0].ring();
        let mut degree = None;
        let (mut out_g, mut out_h) = (Vec::new(), Vec::new());
        for (i, (g, h)) in gs.into_iter().zip(hs).enumerate() {
            g.check_ring(&h)?;
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: g.ring().to_string(),
                    right: ring.to_string(),
                });
            }
            let (Some(a), Some(b)) = (g.homogeneous_degree(), h.homogeneous_degree()) else {
                return Err(Error::InvalidDecomposition(format!(
                    "summand {i}: factors must be nonzero and homogeneous"
                )));
            };
            if a == 0 || b == 0 {
                return Err(Error::InvalidDecomposition(format!(
                    "summand {i}: factors must have positive degree"
                )));
            }
            match degree {
                None => degree = Some(a + b),
                Some(d) if d != a + b => {
                    return Err(Error::DegreeMismatch(format!(
                        "summand {i} has degree {} but summand 0 has degree {d}",
                        a + b
                    )))
                }
                _ => {}
            }
            if a <= b {
                out_g.push(g);
                out_h.push(h);
            } else {
                out_g.push(h);
                out_h.push(g);
            }
        }
        let f = out_g
            .iter()
            .zip(&out_h)
            .fold(ring.zero(), |acc, (g, h)| &acc + &(g * h));
        Ok(StrengthDecomposition {
            ring,
            gs: out_g,
            hs: out_h,
            degree: degree.expect("nonempty"),
            f,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn gs(&self) -> &[Polynomial] {
        &self.gs
    }

    pub fn hs(&self) -> &[Polynomial] {
        &self.hs
    }

    /// Index of the last summand: the decomposition has `s + 1` terms.
    pub fn s(&self) -> usize {
        self.gs.len() - 1
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    /// Sorted degrees of the `g_i`.
    pub fn mu(&self) -> Vec<u32> {
        let mut mu: Vec<u32> = self
            .gs
            .iter()
            .map(|g| g.homogeneous_degree().expect("validated"))
            .collect();
        mu.sort_unstable();
        mu
    }

    /// All factors `g_0..g_s, h_0..h_s`.
    pub fn factors(&self) -> Vec<Polynomial> {
        self.gs.iter().chain(&self.hs).cloned().collect()
    }

    pub fn extend_variables(&self, new_count: usize) -> Result<Self> {
        let ext = |v: &[Polynomial]| {
            v.iter()
                .map(|p| p.extend_variables(new_count))
                .collect::<Result<Vec<_>>>()
        };
        StrengthDecomposition::new(ext(&self.gs)?, ext(&self.hs)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::VarNames;

    fn p(names: &VarNames, s: &str) -> Polynomial {
        names.parse(s, Field::Rational).unwrap()
    }

    #[test]
    fn normalizes_and_sums() {
        let n = VarNames::default_names(6);
        let d = StrengthDecomposition::new(
            vec![p(&n, "z0"), p(&n, "z2^3 + z3^3")],
            vec![p(&n, "z1^3"), p(&n, "z4")],
        )
        .unwrap();
        assert_eq!(d.degree(), 4);
        assert_eq!(d.mu(), vec![1, 1]);
        assert_eq!(d.gs()[1], p(&n, "z4"));
        assert_eq!(d.f(), &p(&n, "z0*z1^3 + z2^3*z4 + z3^3*z4"));
        assert_eq!(d.s(), 1);
    }

    #[test]
    fn type_of_section_example() {
        let n = VarNames::default_names(6);
        let d = StrengthDecomposition::new(
            vec![p(&n, "z0"), p(&n, "z3^4"), p(&n, "z4^3")],
            vec![p(&n, "z1^5"), p(&n, "z2^2"), p(&n, "z5^3")],
        )
        .unwrap();
        assert_eq!(d.mu(), vec![1, 2, 3]);
        assert_eq!(d.gs()[1], p(&n, "z2^2"));
        assert_eq!(d.f(), &p(&n, "z0*z1^5 + z2^2*z3^4 + z4^3*z5^3"));
    }

    #[test]
    fn rejects_bad_input() {
        let n = VarNames::default_names(3);
        assert!(matches!(
            StrengthDecomposition::new(vec![p(&n, "z0")], vec![p(&n, "z1^2")])
                .and_then(|_| StrengthDecomposition::new(
                    vec![p(&n, "z0"), p(&n, "z1")],
                    vec![p(&n, "z1"), p(&n, "z2^2")]
                )),
            Err(Error::DegreeMismatch(_))
        ));
        assert!(StrengthDecomposition::new(vec![p(&n, "1")], vec![p(&n, "z1^2")]).is_err());
        assert!(StrengthDecomposition::new(vec![p(&n, "z0 + z1^2")], vec![p(&n, "z1")]).is_err());
        assert!(StrengthDecomposition::new(vec![p(&n, "0")], vec![p(&n, "z1")]).is_err());
        assert!(StrengthDecomposition::new(vec![], vec![]).is_err());
    }
}
