//! Exact coefficient fields: the rationals and prime fields `F_p` with `p < 2^31`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u32 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if p < 2 || p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::UnknownField(format!("Fp:{p}")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    value: r.to_u32().expect("reduced residue fits in u32"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den` in this field; over `F_p` this is `num * den^-1`.
    pub fn from_fraction(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::NotInvertible("0".into()));
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(_) => {
                let d = self.from_bigint(den);
                let inv = d.inv().ok_or_else(|| Error::NotInvertible(den.to_string()))?;
                Ok(&self.from_bigint(num) * &inv)
            }
        }
    }

    /// Uniform element of `F_p`, or a uniform integer in `[-bound, bound]` over Q.
    pub fn random<R: Rng + ?Sized>(self, rng: &mut R, bound: i64) -> Scalar {
        match self {
            Field::Rational => self.from_i64(rng.gen_range(-bound..=bound)),
            Field::Prime(p) => Scalar::Mod {
                value: rng.gen_range(0..p),
                modulus: p,
            },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = t.strip_prefix("Fp:").or_else(|| t.strip_prefix("GF:")) {
            let p: u32 = rest
                .trim()
                .parse()
                .map_err(|_| Error::UnknownField(s.to_string()))?;
            return Field::prime(p);
        }
        Err(Error::UnknownField(s.to_string()))
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues live in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) if r.is_zero() => None,
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Mod { value: 0, .. } => None,
            Scalar::Mod { value, modulus } => Some(Scalar::Mod {
                value: pow_mod(*value as u64, (*modulus - 2) as u64, *modulus as u64) as u32,
                modulus: *modulus,
            }),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiply by a machine integer (used for exponents in derivatives).
    pub fn scale(&self, k: u64) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r * BigRational::from_integer(BigInt::from(k))),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: ((*value as u64 * (k % *modulus as u64)) % *modulus as u64) as u32,
                modulus: *modulus,
            },
        }
    }

    /// True when the printed form needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    /// `+1` or `-1` test that works in every field.
    pub fn is_unit_sign(&self) -> bool {
        self.is_one() || (-self).is_one()
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn check_same(a: &Scalar, b: &Scalar) -> u32 {
    match (a, b) {
        (Scalar::Mod { modulus: p, .. }, Scalar::Mod { modulus: q, .. }) if p == q => *p,
        _ => panic!("scalar field mismatch: {} vs {}", a.field(), b.field()),
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => {
                let p = check_same(self, rhs);
                Scalar::Mod {
                    value: ((*a as u64 + *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => {
                let p = check_same(self, rhs);
                Scalar::Mod {
                    value: ((*a as u64 + p as u64 - *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, .. }, Scalar::Mod { value: b, .. }) => {
                let p = check_same(self, rhs);
                Scalar::Mod {
                    value: ((*a as u64 * *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = Field::Rational
            .from_fraction(&BigInt::from(4), &BigInt::from(-6))
            .unwrap();
        let r = q.as_rational().unwrap();
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(q.to_string(), "-2/3");
    }

    #[test]
    fn residues_are_canonical() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), Scalar::Mod { value: 6, modulus: 7 });
        assert_eq!(f.from_i64(15), Scalar::Mod { value: 1, modulus: 7 });
        let half = f
            .from_fraction(&BigInt::from(1), &BigInt::from(2))
            .unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
    }

    #[test]
    fn fraction_fails_when_p_divides_denominator() {
        let f = Field::prime(3).unwrap();
        assert!(matches!(
            f.from_fraction(&BigInt::from(1), &BigInt::from(6)),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("Fp:5".parse::<Field>().unwrap(), Field::Prime(5));
        assert!("Fp:6".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
    }

    #[test]
    fn inverse_and_pow() {
        let f = Field::prime(101).unwrap();
        for v in 1..101 {
            let x = f.from_i64(v);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert_eq!(f.from_i64(3).pow(100), f.one());
        assert!(f.zero().inv().is_none());
    }
}
