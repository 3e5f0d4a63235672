//! Monomials with dense exponent vectors and the graded reverse
//! lexicographic order.

use std::cmp::Ordering;

/// A monomial in a fixed number of variables. Exponents are dense;
/// variable counts stay small (about a dozen at most) so this wins over
/// sparse layouts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        let mut exps = vec![0u16; nvars];
        exps[index] = 1;
        Monomial {
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial {
            exps: exps.into_boxed_slice(),
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a + b)
            .collect::<Vec<_>>();
        Monomial::from_exponents(exps)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Vec::with_capacity(self.nvars());
        for (&a, &b) in self.exps.iter().zip(other.exps.iter()) {
            if a > b {
                return None;
            }
            exps.push(b - a);
        }
        Some(Monomial::from_exponents(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.max(b))
            .collect::<Vec<_>>();
        Monomial::from_exponents(exps)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Graded reverse lexicographic comparison: higher total degree wins;
    /// within a degree, the monomial whose rightmost differing exponent is
    /// smaller is the larger one.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (&a, &b) in self.exps.iter().zip(other.exps.iter()).rev() {
            match a.cmp(&b) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grevlex(other)
    }
}

/// Enumerate all monomials of the given total degree in deterministic
/// (lexicographic exponent) order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    if nvars == 0 {
        return if degree == 0 {
            vec![Monomial::one(0)]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut current = vec![0u16; nvars];
    fill(&mut out, &mut current, 0, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u16>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining as u16;
        out.push(Monomial::from_exponents(current.clone()));
        current[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e as u16;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// Number of monomials of total degree `d` in `n` variables.
pub fn monomial_count(nvars: usize, degree: i64) -> u64 {
    if degree < 0 {
        return 0;
    }
    if nvars == 0 {
        return if degree == 0 { 1 } else { 0 };
    }
    // C(degree + nvars - 1, nvars - 1)
    binomial(degree as u64 + nvars as u64 - 1, nvars as u64 - 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_examples() {
        // In 2 vars with x > y: x^2 > xy > y^2, and xy > x.
        let x2 = Monomial::from_exponents(vec![2, 0]);
        let xy = Monomial::from_exponents(vec![1, 1]);
        let y2 = Monomial::from_exponents(vec![0, 2]);
        let x = Monomial::from_exponents(vec![1, 0]);
        assert_eq!(x2.cmp_grevlex(&xy), Ordering::Greater);
        assert_eq!(xy.cmp_grevlex(&y2), Ordering::Greater);
        assert_eq!(xy.cmp_grevlex(&x), Ordering::Greater);
    }

    #[test]
    fn division_and_lcm() {
        let xy = Monomial::from_exponents(vec![1, 1]);
        let x = Monomial::from_exponents(vec![1, 0]);
        let y = Monomial::from_exponents(vec![0, 1]);
        assert!(x.divides(&xy));
        assert_eq!(x.try_div(&xy), Some(y.clone()));
        assert_eq!(xy.try_div(&x), None);
        assert_eq!(x.lcm(&y), xy);
        assert!(x.coprime(&y));
        assert!(!x.coprime(&xy));
    }

    #[test]
    fn enumeration_counts_match() {
        for nvars in 1..=4usize {
            for d in 0..=5u32 {
                let listed = monomials_of_degree(nvars, d);
                assert_eq!(listed.len() as u64, monomial_count(nvars, d as i64));
                for m in &listed {
                    assert_eq!(m.degree(), d);
                }
            }
        }
    }
}
