//! Univariate factorization over F_p.
//!
//! Squarefree decomposition, distinct-degree splitting through Frobenius
//! powers, then Cantor-Zassenhaus equal-degree splitting. The randomized
//! steps draw from a caller-supplied seed so output is reproducible; the
//! result is additionally sorted into a canonical order.

use crate::error::{Error, Result};
use crate::polyring::field::{PrimeField, SplitMix64};
use crate::polyring::monomial::Monomial;
use crate::polyring::poly::{Polynomial, Ring};

/// Dense univariate polynomial, coefficients low degree first, trimmed.
pub(crate) type UPoly = Vec<u64>;

fn trim(f: &mut UPoly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn deg(f: &UPoly) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

fn is_one(f: &UPoly) -> bool {
    f.len() == 1 && f[0] == 1
}

fn add(k: &PrimeField, f: &[u64], g: &[u64]) -> UPoly {
    let mut out = vec![0; f.len().max(g.len())];
    for (i, &c) in f.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in g.iter().enumerate() {
        out[i] = k.add(out[i], c);
    }
    trim(&mut out);
    out
}

fn sub(k: &PrimeField, f: &[u64], g: &[u64]) -> UPoly {
    let mut out = vec![0; f.len().max(g.len())];
    for (i, &c) in f.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in g.iter().enumerate() {
        out[i] = k.sub(out[i], c);
    }
    trim(&mut out);
    out
}

fn mul(k: &PrimeField, f: &[u64], g: &[u64]) -> UPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = k.add(out[i + j], k.mul(a, b));
        }
    }
    trim(&mut out);
    out
}

fn scale(k: &PrimeField, f: &UPoly, c: u64) -> UPoly {
    let mut out: UPoly = f.iter().map(|&a| k.mul(a, c)).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `f / g`, `g` nonzero.
fn divrem(k: &PrimeField, f: &UPoly, g: &UPoly) -> (UPoly, UPoly) {
    let dg = deg(g).expect("division by zero polynomial");
    let lg_inv = k.inv(g[dg]);
    let mut rem = f.clone();
    let mut quo = vec![0u64; f.len().saturating_sub(dg)];
    while let Some(dr) = deg(&rem) {
        if dr < dg {
            break;
        }
        let c = k.mul(rem[dr], lg_inv);
        quo[dr - dg] = c;
        for (i, &b) in g.iter().enumerate() {
            rem[dr - dg + i] = k.sub(rem[dr - dg + i], k.mul(c, b));
        }
        trim(&mut rem);
    }
    trim(&mut quo);
    (quo, rem)
}

fn rem(k: &PrimeField, f: &UPoly, g: &UPoly) -> UPoly {
    divrem(k, f, g).1
}

fn monic(k: &PrimeField, f: &UPoly) -> UPoly {
    match deg(f) {
        None => Vec::new(),
        Some(d) => scale(k, f, k.inv(f[d])),
    }
}

fn gcd(k: &PrimeField, f: &UPoly, g: &UPoly) -> UPoly {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

fn derivative(k: &PrimeField, f: &UPoly) -> UPoly {
    let mut out: UPoly = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| k.mul(c, (i as u64) % k.p()))
        .collect();
    trim(&mut out);
    out
}

fn mulmod(k: &PrimeField, f: &UPoly, g: &UPoly, m: &UPoly) -> UPoly {
    rem(k, &mul(k, f, g), m)
}

fn powmod(k: &PrimeField, f: &UPoly, mut e: u64, m: &UPoly) -> UPoly {
    let mut acc = vec![1u64];
    let mut base = rem(k, f, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(k, &acc, &base, m);
        }
        base = mulmod(k, &base, &base, m);
        e >>= 1;
    }
    acc
}

/// Composition `f(g)` reduced mod `m`, by Horner's rule.
fn compose_mod(k: &PrimeField, f: &UPoly, g: &UPoly, m: &UPoly) -> UPoly {
    let mut acc: UPoly = Vec::new();
    for &c in f.iter().rev() {
        acc = mulmod(k, &acc, g, m);
        if c != 0 {
            acc = add(k, &acc, &[c]);
        }
    }
    acc
}

/// Squarefree decomposition in characteristic p: pairs of monic squarefree
/// parts with their multiplicities.
fn squarefree_parts(k: &PrimeField, f: &UPoly) -> Vec<(UPoly, u32)> {
    let f = monic(k, f);
    if deg(&f) == Some(0) || f.is_empty() {
        return Vec::new();
    }
    let fp = derivative(k, &f);
    if fp.is_empty() {
        // f = v(x^p) = v(x)^p
        let p = k.p() as usize;
        let mut v = Vec::new();
        for (i, &c) in f.iter().enumerate() {
            if c != 0 {
                debug_assert!(i % p == 0);
                if v.len() <= i / p {
                    v.resize(i / p + 1, 0);
                }
                v[i / p] = c;
            }
        }
        return squarefree_parts(k, &v)
            .into_iter()
            .map(|(g, m)| (g, m * k.p() as u32))
            .collect();
    }
    let mut res = Vec::new();
    let mut c = gcd(k, &f, &fp);
    let mut w = divrem(k, &f, &c).0;
    let mut i = 1u32;
    while !is_one(&w) {
        let y = gcd(k, &w, &c);
        let z = divrem(k, &w, &y).0;
        if deg(&z).unwrap_or(0) > 0 {
            res.push((z, i));
        }
        w = y;
        c = divrem(k, &c, &w).0;
        i += 1;
    }
    if !is_one(&c) {
        // leftover p-th power
        let p = k.p() as usize;
        let mut v = Vec::new();
        for (j, &cc) in c.iter().enumerate() {
            if cc != 0 {
                if v.len() <= j / p {
                    v.resize(j / p + 1, 0);
                }
                v[j / p] = cc;
            }
        }
        for (g, m) in squarefree_parts(k, &v) {
            res.push((g, m * k.p() as u32));
        }
    }
    res
}

/// Distinct-degree split of a monic squarefree polynomial: pairs
/// (product of irreducible factors of degree d, d).
fn distinct_degree(k: &PrimeField, f: &UPoly) -> Vec<(UPoly, usize)> {
    let mut res = Vec::new();
    let mut f = f.clone();
    let x: UPoly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0usize;
    while deg(&f).unwrap_or(0) >= 1 {
        d += 1;
        if 2 * d > deg(&f).unwrap() {
            res.push((f.clone(), deg(&f).unwrap()));
            break;
        }
        h = powmod(k, &h, k.p(), &f);
        let g = gcd(k, &sub(k, &h, &x), &f);
        if deg(&g).unwrap_or(0) > 0 {
            res.push((g.clone(), d));
            f = divrem(k, &f, &g).0;
            h = rem(k, &h, &f);
        }
    }
    res
}

/// Cantor-Zassenhaus equal-degree splitting: `f` monic squarefree, all
/// irreducible factors of degree `d`.
fn equal_degree(k: &PrimeField, f: &UPoly, d: usize, rng: &mut SplitMix64, out: &mut Vec<UPoly>) {
    let n = deg(f).unwrap();
    if n == d {
        out.push(f.clone());
        return;
    }
    loop {
        // random a with deg < n
        let mut a: UPoly = (0..n).map(|_| rng.below(k.p())).collect();
        trim(&mut a);
        if deg(&a).unwrap_or(0) < 1 {
            continue;
        }
        let g = gcd(k, &a, f);
        let gd = deg(&g).unwrap_or(0);
        if gd > 0 && gd < n {
            equal_degree(k, &g, d, rng, out);
            equal_degree(k, &divrem(k, f, &g).0, d, rng, out);
            return;
        }
        // b = a^((p^d - 1)/2) = norm(a)^((p-1)/2), norm via Frobenius powers
        let xp = powmod(k, &vec![0, 1], k.p(), f);
        let mut norm = a.clone();
        let mut t = a.clone();
        for _ in 1..d {
            t = compose_mod(k, &t, &xp, f);
            norm = mulmod(k, &norm, &t, f);
        }
        let b = powmod(k, &norm, (k.p() - 1) / 2, f);
        let g = gcd(k, &sub(k, &b, &[1]), f);
        let gd = deg(&g).unwrap_or(0);
        if gd > 0 && gd < n {
            equal_degree(k, &g, d, rng, out);
            equal_degree(k, &divrem(k, f, &g).0, d, rng, out);
            return;
        }
    }
}

/// Full factorization of a dense univariate polynomial into monic
/// irreducibles with multiplicities, canonically sorted.
fn factor_dense(k: &PrimeField, f: &UPoly, seed: u64) -> Vec<(UPoly, u32)> {
    let mut rng = SplitMix64::new(seed ^ 0x75c4_a5d1_90b3_02e7);
    let mut factors: Vec<(UPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_parts(k, f) {
        for (prod, d) in distinct_degree(k, &part) {
            let mut irr = Vec::new();
            equal_degree(k, &prod, d, &mut rng, &mut irr);
            for g in irr {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
            .then_with(|| a.1.cmp(&b.1))
    });
    factors
}

pub(crate) mod dense {
    //! Dense univariate helpers shared with the finite-dimensional
    //! algebra analysis (minimal polynomials, idempotent construction).
    use super::*;

    pub(crate) fn factor(k: &PrimeField, f: &UPoly, seed: u64) -> Vec<(UPoly, u32)> {
        factor_dense(k, f, seed)
    }

    pub(crate) fn multiply(k: &PrimeField, f: &UPoly, g: &UPoly) -> UPoly {
        mul(k, f, g)
    }

    pub(crate) fn remainder(k: &PrimeField, f: &UPoly, g: &UPoly) -> UPoly {
        rem(k, f, g)
    }

    pub(crate) fn divide(k: &PrimeField, f: &UPoly, g: &UPoly) -> (UPoly, UPoly) {
        divrem(k, f, g)
    }

    /// Inverse of `a` modulo `m` when gcd(a, m) = 1, by the extended
    /// Euclidean algorithm.
    pub(crate) fn inverse_mod(k: &PrimeField, a: &UPoly, m: &UPoly) -> Option<UPoly> {
        let (mut r0, mut r1) = (m.clone(), rem(k, a, m));
        let (mut t0, mut t1): (UPoly, UPoly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = divrem(k, &r0, &r1);
            let t = sub(k, &t0, &mul(k, &q, &t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        if deg(&r0) != Some(0) {
            return None;
        }
        Some(scale(k, &t0, k.inv(r0[0])))
    }
}

/// Factor a nonzero polynomial in (at most) one variable into monic
/// irreducible factors with multiplicities; the product of the factors
/// reproduces the input up to the leading unit.
pub fn factor_univariate(f: &Polynomial, seed: u64) -> Result<Vec<(Polynomial, u32)>> {
    if f.is_zero() {
        return Err(Error::Precondition(
            "cannot factor the zero polynomial".into(),
        ));
    }
    let ring = f.ring();
    let mut var: Option<usize> = None;
    for (_, m) in f.terms() {
        for (v, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                match var {
                    None => var = Some(v),
                    Some(w) if w == v => {}
                    Some(_) => {
                        return Err(Error::Precondition(
                            "polynomial involves more than one variable".into(),
                        ))
                    }
                }
            }
        }
    }
    let Some(v) = var else {
        // nonzero constant: a unit, empty factorization
        return Ok(Vec::new());
    };
    let k = *ring.field();
    let mut dense: UPoly = Vec::new();
    for (c, m) in f.terms() {
        let e = m.exponents()[v] as usize;
        if dense.len() <= e {
            dense.resize(e + 1, 0);
        }
        dense[e] = *c;
    }
    let factors = factor_dense(&k, &dense, seed);
    Ok(factors
        .into_iter()
        .map(|(g, mult)| (dense_to_poly(ring, v, &g), mult))
        .collect())
}

fn dense_to_poly(ring: &Ring, var: usize, f: &UPoly) -> Polynomial {
    let terms = f
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| {
            let mut exps = vec![0u16; ring.nvars()];
            exps[var] = e as u16;
            (c, Monomial::from_exponents(exps))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly::{parse_polynomial, standard_ring};

    #[test]
    fn difference_of_squares() {
        let r = standard_ring(32003, &["x"]).unwrap();
        let f = parse_polynomial("x^2 - 1", &r).unwrap();
        let fs = factor_univariate(&f, 0).unwrap();
        let xm1 = parse_polynomial("x - 1", &r).unwrap();
        let xp1 = parse_polynomial("x + 1", &r).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().any(|(g, m)| *m == 1 && *g == xm1));
        assert!(fs.iter().any(|(g, m)| *m == 1 && *g == xp1));
    }

    #[test]
    fn single_variable_is_irreducible() {
        let r = standard_ring(32003, &["x"]).unwrap();
        let f = parse_polynomial("x", &r).unwrap();
        let fs = factor_univariate(&f, 0).unwrap();
        assert_eq!(fs, vec![(f, 1)]);
    }

    #[test]
    fn x2_plus_1_irreducible_for_p_3_mod_4() {
        // 32003 = 4 * 8000 + 3, so -1 is not a square and x^2+1 stays prime.
        // Oracle: brute quadratic-residue check.
        let k = PrimeField::new(32003).unwrap();
        assert_eq!(k.pow(k.p() - 1, (k.p() - 1) / 2), k.p() - 1);
        let r = standard_ring(32003, &["x"]).unwrap();
        let f = parse_polynomial("x^2 + 1", &r).unwrap();
        let fs = factor_univariate(&f, 0).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 1);
        assert_eq!(fs[0].0, f);
    }

    #[test]
    fn multiplicities_recovered() {
        let r = standard_ring(32003, &["t"]).unwrap();
        let f = parse_polynomial("t^3 + 3*t^2 + 3*t + 1", &r).unwrap(); // (t+1)^3
        let fs = factor_univariate(&f, 0).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 3);
        assert_eq!(fs[0].0, parse_polynomial("t + 1", &r).unwrap());
    }

    #[test]
    fn random_products_roundtrip() {
        let r = standard_ring(32003, &["x"]).unwrap();
        let k = *r.field();
        let mut rng = SplitMix64::new(42);
        for _ in 0..60 {
            let degree = 1 + rng.below(8) as usize;
            let mut dense: UPoly = (0..=degree).map(|_| rng.below(32003)).collect();
            dense[degree] = 1 + rng.below(32002);
            trim(&mut dense);
            if deg(&dense).unwrap_or(0) == 0 {
                continue;
            }
            let f = dense_to_poly(&r, 0, &dense);
            let fs = factor_univariate(&f, 7).unwrap();
            // multiply back, monic-normalized
            let mut prod = vec![1u64];
            for (g, m) in &fs {
                let gd: UPoly = {
                    let mut v = vec![0u64; g.degree().unwrap() as usize + 1];
                    for (c, mo) in g.terms() {
                        v[mo.exponents()[0] as usize] = *c;
                    }
                    v
                };
                for _ in 0..*m {
                    prod = mul(&k, &prod, &gd);
                }
            }
            assert_eq!(prod, monic(&k, &dense), "roundtrip failed for {f}");
        }
    }
}
