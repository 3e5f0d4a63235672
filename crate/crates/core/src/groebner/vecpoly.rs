//! Elements of graded free modules and the module term order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::monomial::Monomial;
use crate::polyring::poly::{same_ring, Polynomial, Ring};

/// A graded free module: a ring together with one degree per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    ring: Ring,
    degrees: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: &Ring, degrees: Vec<i64>) -> Self {
        FreeModule {
            ring: ring.clone(),
            degrees,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, pos: usize) -> i64 {
        self.degrees[pos]
    }

    /// The dual free module: one generator of degree `-d` per generator of
    /// degree `d`.
    pub fn dual(&self) -> FreeModule {
        FreeModule {
            ring: self.ring.clone(),
            degrees: self.degrees.iter().map(|d| -d).collect(),
        }
    }

    pub fn same_as(&self, other: &FreeModule) -> bool {
        same_ring(&self.ring, &other.ring) && self.degrees == other.degrees
    }
}

/// A leading term of a module element: position, coefficient, monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModTerm {
    pub pos: usize,
    pub coeff: u64,
    pub mono: Monomial,
}

/// Position-over-term comparison: lower position dominates; within a
/// position, grevlex.
pub fn cmp_mod_term(a_pos: usize, a_mono: &Monomial, b_pos: usize, b_mono: &Monomial) -> Ordering {
    match a_pos.cmp(&b_pos) {
        Ordering::Less => Ordering::Greater,
        Ordering::Greater => Ordering::Less,
        Ordering::Equal => a_mono.cmp_grevlex(b_mono),
    }
}

/// Homogeneity verdict for module elements (degrees can be negative).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModHomogeneity {
    ZeroEveryDegree,
    Homogeneous(i64),
    Inhomogeneous,
}

/// An element of a free module: sparse map from positions to nonzero
/// polynomial entries.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorPoly {
    rank: usize,
    entries: BTreeMap<usize, Polynomial>,
}

impl fmt::Debug for VectorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (pos, p)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "e{pos}: {p}")?;
        }
        write!(f, "]")
    }
}

impl VectorPoly {
    pub fn zero(rank: usize) -> Self {
        VectorPoly {
            rank,
            entries: BTreeMap::new(),
        }
    }

    pub fn unit(rank: usize, pos: usize, ring: &Ring) -> Self {
        Self::from_entry(rank, pos, Polynomial::one(ring))
    }

    pub fn from_entry(rank: usize, pos: usize, poly: Polynomial) -> Self {
        debug_assert!(pos < rank);
        let mut entries = BTreeMap::new();
        if !poly.is_zero() {
            entries.insert(pos, poly);
        }
        VectorPoly { rank, entries }
    }

    pub fn from_entries(rank: usize, list: Vec<(usize, Polynomial)>) -> Self {
        let mut v = VectorPoly::zero(rank);
        for (pos, p) in list {
            debug_assert!(pos < rank);
            v.add_entry(pos, &p);
        }
        v
    }

    /// Dense column view, zero-padded.
    pub fn to_column(&self, ring: &Ring) -> Vec<Polynomial> {
        (0..self.rank)
            .map(|i| {
                self.entries
                    .get(&i)
                    .cloned()
                    .unwrap_or_else(|| Polynomial::zero(ring))
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.entries.iter().map(|(&p, poly)| (p, poly))
    }

    pub fn entry(&self, pos: usize) -> Option<&Polynomial> {
        self.entries.get(&pos)
    }

    pub fn add_entry(&mut self, pos: usize, p: &Polynomial) {
        if p.is_zero() {
            return;
        }
        match self.entries.remove(&pos) {
            None => {
                self.entries.insert(pos, p.clone());
            }
            Some(old) => {
                let sum = old.add(p);
                if !sum.is_zero() {
                    self.entries.insert(pos, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &VectorPoly) -> VectorPoly {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (pos, p) in other.entries() {
            out.add_entry(pos, p);
        }
        out
    }

    pub fn neg(&self) -> VectorPoly {
        VectorPoly {
            rank: self.rank,
            entries: self
                .entries
                .iter()
                .map(|(&pos, p)| (pos, p.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &VectorPoly) -> VectorPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> VectorPoly {
        let mut entries = BTreeMap::new();
        for (&pos, p) in &self.entries {
            let q = p.scale(c);
            if !q.is_zero() {
                entries.insert(pos, q);
            }
        }
        VectorPoly {
            rank: self.rank,
            entries,
        }
    }

    pub fn mul_term(&self, coeff: u64, mono: &Monomial) -> VectorPoly {
        let mut entries = BTreeMap::new();
        for (&pos, p) in &self.entries {
            let q = p.mul_term(coeff, mono);
            if !q.is_zero() {
                entries.insert(pos, q);
            }
        }
        VectorPoly {
            rank: self.rank,
            entries,
        }
    }

    pub fn mul_poly(&self, q: &Polynomial) -> Result<VectorPoly> {
        let mut out = VectorPoly::zero(self.rank);
        for (pos, p) in self.entries() {
            out.add_entry(pos, &p.mul(q)?);
        }
        Ok(out)
    }

    /// The leading term under position-over-term order.
    pub fn leading_term(&self) -> Option<ModTerm> {
        let (&pos, poly) = self.entries.iter().next()?;
        let (coeff, mono) = poly.leading()?;
        Some(ModTerm {
            pos,
            coeff,
            mono: mono.clone(),
        })
    }

    /// Remove and return the leading term.
    pub fn pop_leading_term(&mut self) -> Option<ModTerm> {
        let (&pos, _) = self.entries.iter().next()?;
        let poly = self.entries.remove(&pos).unwrap();
        let mut terms: Vec<(u64, Monomial)> = poly.terms().to_vec();
        let (coeff, mono) = terms.remove(0);
        if !terms.is_empty() {
            self.entries
                .insert(pos, Polynomial::from_terms(poly.ring(), terms));
        }
        Some(ModTerm { pos, coeff, mono })
    }

    pub fn push_term(&mut self, ring: &Ring, t: &ModTerm) {
        self.add_entry(pos_of(t), &Polynomial::term(ring, t.coeff, t.mono.clone()));
    }

    /// Degree of a homogeneous element relative to an ambient module.
    pub fn homogeneity(&self, ambient: &FreeModule) -> ModHomogeneity {
        let mut degree: Option<i64> = None;
        for (pos, p) in self.entries() {
            for (_, m) in p.terms() {
                let d = m.degree() as i64 + ambient.degree(pos);
                match degree {
                    None => degree = Some(d),
                    Some(e) if e == d => {}
                    Some(_) => return ModHomogeneity::Inhomogeneous,
                }
            }
        }
        match degree {
            None => ModHomogeneity::ZeroEveryDegree,
            Some(d) => ModHomogeneity::Homogeneous(d),
        }
    }

    /// Degree of a homogeneous nonzero element; errors otherwise.
    pub fn degree_in(&self, ambient: &FreeModule) -> Result<i64> {
        match self.homogeneity(ambient) {
            ModHomogeneity::Homogeneous(d) => Ok(d),
            ModHomogeneity::ZeroEveryDegree => Err(Error::Internal(
                "degree of the zero vector requested".into(),
            )),
            ModHomogeneity::Inhomogeneous => Err(Error::Inhomogeneous("module element".into())),
        }
    }
}

fn pos_of(t: &ModTerm) -> usize {
    t.pos
}
