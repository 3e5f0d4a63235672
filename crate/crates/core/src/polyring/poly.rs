//! Multivariate polynomials over a prime field with grevlex-sorted terms.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::field::PrimeField;
use crate::polyring::monomial::Monomial;

/// The ambient polynomial ring: coefficient field and ordered variables.
/// The monomial order is fixed to graded reverse lexicographic. The
/// irrelevant maximal ideal is generated by all the variables, which is
/// what makes the graded ring a faithful stand-in for a local ring.
#[derive(Debug, PartialEq, Eq)]
pub struct RingDescriptor {
    field: PrimeField,
    vars: Vec<String>,
}

pub type Ring = Arc<RingDescriptor>;

impl RingDescriptor {
    pub fn new(field: PrimeField, vars: Vec<String>) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::Internal("ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Internal(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(RingDescriptor { field, vars }))
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Convenience constructor: `F_p[x1, ..., xn]` over the given prime.
pub fn standard_ring(prime: u64, names: &[&str]) -> Result<Ring> {
    RingDescriptor::new(
        PrimeField::new(prime)?,
        names.iter().map(|s| s.to_string()).collect(),
    )
}

/// Homogeneity verdict for a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial is homogeneous of every degree.
    ZeroEveryDegree,
    Homogeneous(u32),
    Inhomogeneous,
}

/// A polynomial: nonzero terms sorted strictly decreasing in grevlex.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(u64, Monomial)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: u64) -> Self {
        let c = c % ring.field().p();
        let mut terms = Vec::new();
        if c != 0 {
            terms.push((c, Monomial::one(ring.nvars())));
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn variable(ring: &Ring, index: usize) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(1, Monomial::var(index, ring.nvars()))],
        }
    }

    pub fn term(ring: &Ring, coeff: u64, mono: Monomial) -> Self {
        let coeff = coeff % ring.field().p();
        let mut terms = Vec::new();
        if coeff != 0 {
            terms.push((coeff, mono));
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Canonicalize an arbitrary term list: sort, merge duplicates, drop
    /// zero coefficients.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(u64, Monomial)>) -> Self {
        let field = *ring.field();
        terms.sort_by(|a, b| b.1.cmp_grevlex(&a.1));
        let mut merged: Vec<(u64, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            let c = c % field.p();
            match merged.last_mut() {
                Some(last) if last.1 == m => {
                    last.0 = field.add(last.0, c);
                }
                _ => merged.push((c, m)),
            }
        }
        merged.retain(|&(c, _)| c != 0);
        Polynomial {
            ring: Arc::clone(ring),
            terms: merged,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(u64, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(u64, &Monomial)> {
        self.terms.first().map(|(c, m)| (*c, m))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_coeff(&self) -> u64 {
        self.terms
            .iter()
            .find(|(_, m)| m.is_one())
            .map(|(c, _)| *c)
            .unwrap_or(0)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.iter().map(|(_, m)| m.degree());
        match degrees.next() {
            None => Homogeneity::ZeroEveryDegree,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let field = *self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].1.cmp_grevlex(&other.terms[j].1) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(self.terms[i].0, other.terms[j].0);
                    if c != 0 {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = *self.ring.field();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (field.neg(*c), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let field = *self.ring.field();
        let c = c % field.p();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (field.mul(*a, c), m.clone()))
                .collect(),
        }
    }

    /// Multiply by a single term. Preserves sortedness.
    pub fn mul_term(&self, coeff: u64, mono: &Monomial) -> Polynomial {
        let field = *self.ring.field();
        let coeff = coeff % field.p();
        if coeff == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (field.mul(*c, coeff), m.mul(mono)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c, m) in &self.terms {
            for (d, n) in &other.terms {
                acc.push((self.ring.field().mul(*c, *d), m.mul(n)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc))
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form. Coefficients print in the symmetric range, so
    /// `p - 1` renders as a subtraction: `x^2*y - y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.ring.field().p();
        for (idx, (c, m)) in self.terms.iter().enumerate() {
            let (negative, mag) = if *c > p / 2 {
                (true, p - c)
            } else {
                (false, *c)
            };
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut printed_coeff = false;
            if mag != 1 || m.is_one() {
                write!(f, "{mag}")?;
                printed_coeff = true;
            }
            let mut first_var = true;
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if printed_coeff || !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "{}", self.ring.vars()[v])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parse a polynomial in the grammar
/// `expr := ['-'] term (('+'|'-') term)*`,
/// `term := factor ('*' factor)*`,
/// `factor := integer | variable ['^' integer]`.
/// Whitespace is insignificant; integer coefficients reduce mod p.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ring,
    }
    .parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<Polynomial> {
        let poly = self.expr()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(Error::Parse {
                pos: self.pos,
                msg: format!("unexpected `{}`", self.bytes[self.pos] as char),
            });
        }
        Ok(poly)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.ring, n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident();
                let Some(index) = self.ring.var_index(&name) else {
                    return Err(Error::UnknownVariable { pos: start, name });
                };
                let exp = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.integer()?;
                    if e > u16::MAX as u64 {
                        return Err(Error::Parse {
                            pos: self.pos,
                            msg: format!("exponent {e} too large"),
                        });
                    }
                    e as u16
                } else {
                    1
                };
                let mut exps = vec![0u16; self.ring.nvars()];
                exps[index] = exp;
                Ok(Polynomial::term(
                    self.ring,
                    1,
                    Monomial::from_exponents(exps),
                ))
            }
            Some(c) => Err(Error::Parse {
                pos: self.pos,
                msg: format!("expected coefficient or variable, found `{}`", c as char),
            }),
            None => Err(Error::Parse {
                pos: self.pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let p = self.ring.field().p();
        let mut value = 0u64;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            value = (value * 10 + (self.bytes[self.pos] - b'0') as u64) % p;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse {
                pos: start,
                msg: "expected an integer".into(),
            });
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        standard_ring(32003, &["x", "y"]).unwrap()
    }

    #[test]
    fn parse_zero() {
        let r = ring2();
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
    }

    #[test]
    fn parse_collects_coefficients() {
        let r = ring2();
        let f = parse_polynomial("x + x", &r).unwrap();
        assert_eq!(f, parse_polynomial("2*x", &r).unwrap());
    }

    #[test]
    fn parse_orders_terms_grevlex() {
        let r = ring2();
        let f = parse_polynomial("x^2*y - y", &r).unwrap();
        let degs: Vec<u32> = f.terms().iter().map(|(_, m)| m.degree()).collect();
        assert_eq!(degs, vec![3, 1]);
        assert_eq!(f.terms()[0].1.exponents(), &[2, 1]);
        assert_eq!(f.terms()[1].0, 32002); // -1
    }

    #[test]
    fn product_identities() {
        let r = ring2();
        let x = parse_polynomial("x", &r).unwrap();
        let zero = Polynomial::zero(&r);
        assert!(x.mul(&zero).unwrap().is_zero());
        let sum = parse_polynomial("x + y", &r).unwrap();
        let diff = parse_polynomial("x - y", &r).unwrap();
        assert_eq!(
            sum.mul(&diff).unwrap(),
            parse_polynomial("x^2 - y^2", &r).unwrap()
        );
        let xp1 = parse_polynomial("x + 1", &r).unwrap();
        assert_eq!(
            xp1.mul(&xp1).unwrap(),
            parse_polynomial("x^2 + 2*x + 1", &r).unwrap()
        );
    }

    #[test]
    fn homogeneity_verdicts() {
        let r = ring2();
        assert_eq!(
            parse_polynomial("x^2*y + x^3", &r).unwrap().homogeneity(),
            Homogeneity::Homogeneous(3)
        );
        assert_eq!(
            parse_polynomial("x + x^2", &r).unwrap().homogeneity(),
            Homogeneity::Inhomogeneous
        );
        assert_eq!(
            Polynomial::zero(&r).homogeneity(),
            Homogeneity::ZeroEveryDegree
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let r = ring2();
        match parse_polynomial("x + w", &r) {
            Err(Error::UnknownVariable { pos, name }) => {
                assert_eq!(pos, 4);
                assert_eq!(name, "w");
            }
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
        match parse_polynomial("x + ", &r) {
            Err(Error::Parse { .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_polynomial("x ^", &r) {
            Err(Error::Parse { .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let r = ring2();
        let other = standard_ring(32003, &["a", "b"]).unwrap();
        let f = parse_polynomial("x", &r).unwrap();
        let g = parse_polynomial("a", &other).unwrap();
        assert_eq!(f.mul(&g), Err(Error::RingMismatch));
    }

    #[test]
    fn display_roundtrip() {
        let r = ring2();
        for text in ["0", "x^2*y - y", "3*x*y + 2", "x - 1", "-x + y"] {
            let f = parse_polynomial(text, &r).unwrap();
            let g = parse_polynomial(&f.to_string(), &r).unwrap();
            assert_eq!(f, g, "round trip failed for {text}: printed {f}");
        }
    }

    fn random_polynomial(
        ring: &Ring,
        rng: &mut crate::polyring::field::SplitMix64,
        max_degree: u32,
    ) -> Polynomial {
        let nterms = rng.below(5);
        let mut terms = Vec::new();
        for _ in 0..nterms {
            let c = rng.below(ring.field().p());
            let exps = (0..ring.nvars())
                .map(|_| rng.below(max_degree as u64 + 1) as u16)
                .collect();
            terms.push((c, Monomial::from_exponents(exps)));
        }
        Polynomial::from_terms(ring, terms)
    }

    #[test]
    fn randomized_ring_laws() {
        // canonical form, additive inverses, associativity and
        // distributivity over a thousand seeded cases
        let r = ring2();
        let mut rng = crate::polyring::field::SplitMix64::new(0x9e37_0001);
        for _ in 0..1000 {
            let f = random_polynomial(&r, &mut rng, 4);
            let g = random_polynomial(&r, &mut rng, 4);
            let h = random_polynomial(&r, &mut rng, 4);
            assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
            assert!(f.add(&f.neg()).is_zero());
            let fg_h = f.mul(&g).unwrap().mul(&h).unwrap();
            let f_gh = f.mul(&g.mul(&h).unwrap()).unwrap();
            assert_eq!(fg_h, f_gh);
            let lhs = f.mul(&g.add(&h)).unwrap();
            let rhs = f.mul(&g).unwrap().add(&f.mul(&h).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn homogeneous_products_are_homogeneous() {
        let r = ring2();
        let mut rng = crate::polyring::field::SplitMix64::new(0xabc1);
        let mut checked = 0;
        while checked < 200 {
            let d1 = rng.below(4) as u32;
            let d2 = rng.below(4) as u32;
            let monos1 = crate::polyring::monomial::monomials_of_degree(2, d1);
            let monos2 = crate::polyring::monomial::monomials_of_degree(2, d2);
            let pick = |monos: &[Monomial], rng: &mut crate::polyring::field::SplitMix64| {
                let terms = (0..=rng.below(2))
                    .map(|_| {
                        (
                            1 + rng.below(32002),
                            monos[rng.below(monos.len() as u64) as usize].clone(),
                        )
                    })
                    .collect();
                Polynomial::from_terms(&r, terms)
            };
            let f = pick(&monos1, &mut rng);
            let g = pick(&monos2, &mut rng);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let prod = f.mul(&g).unwrap();
            assert_eq!(prod.homogeneity(), Homogeneity::Homogeneous(d1 + d2));
            checked += 1;
        }
    }
}
