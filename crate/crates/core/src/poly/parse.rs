//! Text grammar for polynomials.
//!
//! Terms are joined by `+`/`-`; a term is `[coeff][*]var^exp[*var^exp...]`
//! where the coefficient is an integer or `a/b`. Whitespace is ignored
//! between tokens. Over `F_p`, `a/b` means `a * b^-1`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::poly::{Monomial, Polynomial, Ring};

/// Variable names of an ambient ring, in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarNames {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl VarNames {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut lookup = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::Document(format!("invalid variable name '{n}'")));
            }
            if lookup.insert(n.clone(), i).is_some() {
                return Err(Error::Document(format!("duplicate variable name '{n}'")));
            }
        }
        Ok(VarNames { names, lookup })
    }

    /// `z0, z1, ..., z{n-1}`.
    pub fn default_names(n: usize) -> Self {
        VarNames::new((0..n).map(|i| format!("z{i}"))).expect("valid default names")
    }

    pub fn is_default(&self) -> bool {
        self.names
            .iter()
            .enumerate()
            .all(|(i, n)| *n == format!("z{i}"))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    /// Appends default-style names `z{k}` until there are `n` variables.
    pub fn extended(&self, n: usize) -> VarNames {
        let mut names = self.names.clone();
        let mut k = 0;
        while names.len() < n {
            let cand = format!("z{}", names.len() + k);
            if self.lookup.contains_key(&cand) {
                k += 1;
                continue;
            }
            names.push(cand);
        }
        VarNames::new(names).expect("fresh names are unique")
    }

    /// Infers the variables used by a set of polynomial texts. If every
    /// identifier is `z<k>` the ring is `z0..z{max k}`; otherwise the
    /// distinct names are sorted in natural order.
    pub fn infer<'a>(texts: impl IntoIterator<Item = &'a str>) -> VarNames {
        let mut seen = BTreeSet::new();
        for t in texts {
            seen.extend(identifiers(t));
        }
        let zmax = seen
            .iter()
            .map(|n| n.strip_prefix('z').and_then(|r| r.parse::<usize>().ok()))
            .collect::<Option<Vec<_>>>();
        if let Some(indices) = zmax {
            let n = indices.iter().max().map_or(0, |m| m + 1);
            return VarNames::default_names(n);
        }
        let mut names: Vec<String> = seen.into_iter().collect();
        names.sort_by(|a, b| natural_cmp(a, b));
        VarNames::new(names).expect("identifiers are valid names")
    }

    pub fn parse(&self, text: &str, field: Field) -> Result<Polynomial> {
        Parser::new(text, self, field).parse_polynomial()
    }

    /// Canonical text: terms in decreasing grevlex order.
    pub fn format(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = if neg { -c } else { c.clone() };
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        parts.join("*")
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn identifiers(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut in_ident = false;
    for c in text.chars() {
        if in_ident {
            if c.is_ascii_alphanumeric() || c == '_' {
                cur.push(c);
                continue;
            }
            out.push(std::mem::take(&mut cur));
            in_ident = false;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            in_ident = true;
            cur.push(c);
        }
    }
    if in_ident {
        out.push(cur);
    }
    out
}

/// Compares names chunk-wise so that `x2 < x10`.
fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, String)> {
        let mut v: Vec<(bool, String)> = Vec::new();
        for c in s.chars() {
            let digit = c.is_ascii_digit();
            match v.last_mut() {
                Some((d, cur)) if *d == digit => cur.push(c),
                _ => v.push((digit, c.to_string())),
            }
        }
        v
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(&cb) {
        let o = if *da && *db {
            let na: u128 = sa.parse().unwrap_or(u128::MAX);
            let nb: u128 = sb.parse().unwrap_or(u128::MAX);
            na.cmp(&nb)
        } else {
            sa.cmp(sb)
        };
        if o != Ordering::Equal {
            return o;
        }
    }
    ca.len().cmp(&cb.len())
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a VarNames,
    field: Field,
}

impl<'a> Parser<'a> {
    fn new(text: &str, names: &'a VarNames, field: Field) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            names,
            field,
        }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn error<T>(&self, pos: usize, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.location(pos);
        Err(Error::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse_polynomial(&mut self) -> Result<Polynomial> {
        let ring = Ring::new(self.names.len(), self.field);
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                None if first => return self.error(self.pos, "empty polynomial"),
                None => return self.error(self.pos, "expected a term after sign"),
                Some('+') | Some('-') => {
                    negative = self.chars[self.pos] == '-';
                    self.pos += 1;
                }
                Some(_) if first => {}
                Some(c) => return self.error(self.pos, format!("expected '+' or '-', found '{c}'")),
            }
            first = false;
            let (m, mut c) = self.parse_term(ring)?;
            if negative {
                c = -&c;
            }
            terms.push((m, c));
            if self.peek().is_none() {
                break;
            }
        }
        Ok(Polynomial::from_terms(ring, terms))
    }

    fn parse_term(&mut self, ring: Ring) -> Result<(Monomial, Scalar)> {
        let mut coeff = self.field.one();
        let mut exps = vec![0u16; ring.nvars];
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.parse_coefficient()?;
                match self.peek() {
                    Some('*') => {
                        self.pos += 1;
                        self.parse_factor(&mut exps)?;
                    }
                    Some(c) if c.is_ascii_alphabetic() || c == '_' => self.parse_factor(&mut exps)?,
                    _ => return Ok((Monomial::from_exponents(exps), coeff)),
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.parse_factor(&mut exps)?,
            Some(c) => return self.error(self.pos, format!("unexpected '{c}'")),
            None => return self.error(self.pos, "expected a term"),
        }
        while self.peek() == Some('*') {
            self.pos += 1;
            self.parse_factor(&mut exps)?;
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn parse_factor(&mut self, exps: &mut [u16]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_alphabetic() || *c == '_') {
            return self.error(start, "expected a variable");
        }
        while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_alphanumeric() || *c == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let Some(idx) = self.names.index_of(&name) else {
            return self.error(start, format!("unknown variable '{name}'"));
        };
        let mut e: u32 = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let ds = self.pos;
            let digits = self.take_digits();
            if digits.is_empty() {
                return self.error(ds, "expected an exponent after '^'");
            }
            e = digits
                .parse()
                .ok()
                .filter(|&v: &u32| v <= u16::MAX as u32)
                .map_or_else(|| self.error(ds, "exponent too large"), Ok)?;
        }
        let slot = exps[idx] as u32 + e;
        if slot > u16::MAX as u32 {
            return self.error(start, "exponent too large");
        }
        exps[idx] = slot as u16;
        Ok(())
    }

    fn take_digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn parse_coefficient(&mut self) -> Result<Scalar> {
        self.skip_ws();
        let start = self.pos;
        let num: BigInt = self.take_digits().parse().expect("digits");
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let ds = self.pos;
            let den_s = self.take_digits();
            if den_s.is_empty() {
                return self.error(ds, "expected a denominator after '/'");
            }
            let den: BigInt = den_s.parse().expect("digits");
            if !den.is_positive() {
                return self.error(ds, "zero denominator");
            }
            return match self.field.from_fraction(&num, &den) {
                Ok(c) => Ok(c),
                Err(_) => self.error(start, format!("{num}/{den} is not defined in {}", self.field)),
            };
        }
        if num.is_one() {
            return Ok(self.field.one());
        }
        Ok(self.field.from_bigint(&num))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> VarNames {
        VarNames::new(["x0", "x1", "y0", "y1"]).unwrap()
    }

    #[test]
    fn parses_quadric() {
        let q = names().parse("x0*y0 + x1*y1", Field::Rational).unwrap();
        assert_eq!(q.num_terms(), 2);
        assert_eq!(q.homogeneous_degree(), Some(2));
    }

    #[test]
    fn parses_rational_coefficients() {
        let n = VarNames::default_names(3);
        let p = n.parse("3*z0^2*z1 - 1/2*z2^3", Field::Rational).unwrap();
        assert_eq!(n.format(&p), "3*z0^2*z1 - 1/2*z2^3");
        let again = n.parse(&n.format(&p), Field::Rational).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn fraction_over_prime_field_inverts_denominator() {
        let n = VarNames::default_names(2);
        let f5 = Field::prime(5).unwrap();
        let p = n.parse("1/2*z0^3 - z1^3", f5).unwrap();
        // 1/2 = 3 mod 5, -1 = 4 mod 5
        assert_eq!(n.format(&p), "3*z0^3 + 4*z1^3");
        let f2 = Field::prime(2).unwrap();
        assert!(matches!(n.parse("1/2*z0^3 - z1^3", f2), Err(Error::Syntax { .. })));
    }

    #[test]
    fn malformed_caret_reports_column_one() {
        let err = VarNames::default_names(1)
            .parse("^x0", Field::Rational)
            .unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 1,
                column: 1,
                message: "unexpected '^'".into()
            }
        );
    }

    #[test]
    fn error_positions_track_lines() {
        let err = names()
            .parse("x0*y0 +\n  x1*w", Field::Rational)
            .unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, column: 6, .. }), "{err:?}");
    }

    #[test]
    fn whitespace_and_implicit_star() {
        let n = names();
        let a = n.parse(" 2 x0 ^ 2 *y1 - y0", Field::Rational).unwrap();
        let b = n.parse("2*x0^2*y1-y0", Field::Rational).unwrap();
        assert_eq!(a, b);
        assert_eq!(n.parse("0", Field::Rational).unwrap().num_terms(), 0);
        assert_eq!(n.format(&n.parse("5 - x0 + x0", Field::Rational).unwrap()), "5");
    }

    #[test]
    fn infers_names() {
        assert_eq!(VarNames::infer(["z3 + z0"]).len(), 4);
        let n = VarNames::infer(["x10*y1 + x2*y0"]);
        assert_eq!(n.names(), ["x2", "x10", "y0", "y1"]);
    }
}
