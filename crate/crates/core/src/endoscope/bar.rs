//! The finite-dimensional image of `End(E)` acting on `E/mE`, its
//! radical by the trace form of the regular representation, and the
//! decomposition of the semisimple quotient into simple blocks. These
//! decide locality: `E` is local exactly when the semisimple quotient has
//! a single block.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpmodules::module::FPModule;
use crate::fpmodules::morphism::minimalize;
use crate::linalg::{FpMatrix, SpanBuilder};
use crate::polyring::factor::dense;
use crate::polyring::field::{PrimeField, SplitMix64};

use super::end_algebra::{end_algebra, EndAlgebra};

/// A finite-dimensional subalgebra of `M_n(k)`, spanned by the constant
/// parts of the endomorphism witnesses.
pub struct BarAlgebra {
    pub n: usize,
    pub field: PrimeField,
    /// echelonized basis, each matrix flattened row-major to length n^2
    pub basis: Vec<Vec<u64>>,
    pub contains_identity: bool,
}

fn flatten(m: &FpMatrix) -> Vec<u64> {
    (0..m.rows)
        .flat_map(|i| (0..m.cols).map(move |j| m.at(i, j)))
        .collect()
}

fn mat_from_flat(field: PrimeField, n: usize, v: &[u64]) -> FpMatrix {
    let mut m = FpMatrix::zero(field, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, v[i * n + j]);
        }
    }
    m
}

/// The constant-part matrix of an endomorphism witness: the induced map
/// on `E/mE`.
pub fn bar_matrix(
    field: PrimeField,
    n: usize,
    w: &crate::fpmodules::morphism::ModuleMorphism,
) -> FpMatrix {
    let mut m = FpMatrix::zero(field, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, w.matrix()[i][j].constant_coeff());
        }
    }
    m
}

/// Span the witness bars. Requires relations inside `m * F0` so the
/// action descends to `E/mE`.
pub fn bar_algebra(e: &FPModule, end: &EndAlgebra) -> Result<BarAlgebra> {
    if !e.is_minimal() {
        return Err(Error::NotMinimal(
            "bar algebra needs relations inside m * F0".into(),
        ));
    }
    let field = *e.ring().field();
    let n = e.ambient().rank();
    let mut span = SpanBuilder::new(field, n * n);
    for w in end.hom.witnesses() {
        let m = bar_matrix(field, n, w);
        span.insert(flatten(&m));
    }
    let basis = span.basis();
    debug_assert!(basis.len() <= n * n);
    // closure under multiplication
    for a in &basis {
        for b in &basis {
            let prod = mat_from_flat(field, n, a).matmul(&mat_from_flat(field, n, b));
            if !span.contains(&flatten(&prod)) {
                return Err(Error::Internal(
                    "bar algebra span not closed under multiplication".into(),
                ));
            }
        }
    }
    let contains_identity = span.contains(&flatten(&FpMatrix::identity(field, n)));
    Ok(BarAlgebra {
        n,
        field,
        basis,
        contains_identity,
    })
}

impl BarAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn span(&self) -> SpanBuilder {
        let mut span = SpanBuilder::new(self.field, self.n * self.n);
        for b in &self.basis {
            span.insert(b.clone());
        }
        span
    }

    /// Structure data: left-multiplication matrices in basis coordinates.
    fn left_regular(&self) -> Result<Vec<FpMatrix>> {
        let d = self.dim();
        let span = self.span();
        let mut out = Vec::with_capacity(d);
        for u in 0..d {
            let mu = mat_from_flat(self.field, self.n, &self.basis[u]);
            let mut l = FpMatrix::zero(self.field, d, d);
            for v in 0..d {
                let prod = mu.matmul(&mat_from_flat(self.field, self.n, &self.basis[v]));
                let Some(coords) = span.coordinates(&flatten(&prod)) else {
                    return Err(Error::Internal("product escaped the span".into()));
                };
                for (w, c) in coords.into_iter().enumerate() {
                    l.set(w, v, c);
                }
            }
            out.push(l);
        }
        Ok(out)
    }
}

/// Radical of the bar algebra as the kernel of the trace form
/// `T(a, b) = tr(L_a L_b)` of the left-regular representation, valid for
/// `p > dim`. The result is verified nilpotent by explicit powering.
pub fn fd_radical(a: &BarAlgebra) -> Result<Vec<Vec<u64>>> {
    let d = a.dim();
    if a.field.p() <= d as u64 {
        return Err(Error::PrimeTooSmall {
            prime: a.field.p(),
            dim: d,
        });
    }
    if d == 0 {
        return Ok(Vec::new());
    }
    let left = a.left_regular()?;
    let mut gram = FpMatrix::zero(a.field, d, d);
    for u in 0..d {
        for v in 0..d {
            gram.set(u, v, left[u].matmul(&left[v]).trace());
        }
    }
    let kernel = gram.kernel_basis();
    // materialize radical elements and echelonize
    let mut span = SpanBuilder::new(a.field, a.n * a.n);
    for coeffs in kernel {
        let mut vec = vec![0u64; a.n * a.n];
        for (u, c) in coeffs.into_iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (i, b) in a.basis[u].iter().enumerate() {
                vec[i] = a.field.add(vec[i], a.field.mul(c, *b));
            }
        }
        span.insert(vec);
    }
    let rad = span.basis();
    // nilpotency check by powering the span
    let mut current = rad.clone();
    let mut steps = 0;
    while !current.is_empty() {
        steps += 1;
        if steps > d + 1 {
            return Err(Error::Internal("radical candidate is not nilpotent".into()));
        }
        let mut next = SpanBuilder::new(a.field, a.n * a.n);
        for x in &current {
            for r in &rad {
                let prod = mat_from_flat(a.field, a.n, x).matmul(&mat_from_flat(a.field, a.n, r));
                next.insert(flatten(&prod));
            }
        }
        current = next.basis();
    }
    Ok(rad)
}

/// The semisimple quotient `S = A / rad` with multiplication through
/// structure constants on a complement basis.
struct Semisimple {
    field: PrimeField,
    dim: usize,
    /// products of complement classes in complement coordinates
    mult: Vec<Vec<Vec<u64>>>,
    /// identity class in complement coordinates
    one: Vec<u64>,
}

impl Semisimple {
    fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let k = self.field;
        let mut out = vec![0u64; self.dim];
        for (u, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (v, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let c = k.mul(a, b);
                for (w, &g) in self.mult[u][v].iter().enumerate() {
                    out[w] = k.add(out[w], k.mul(c, g));
                }
            }
        }
        out
    }
}

fn semisimple_quotient(a: &BarAlgebra, rad: &[Vec<u64>]) -> Result<Semisimple> {
    let field = a.field;
    let width = a.n * a.n;
    let mut rad_span = SpanBuilder::new(field, width);
    for r in rad {
        rad_span.insert(r.clone());
    }
    // class representatives: echelonized reductions of the algebra basis
    // modulo the radical; their own coordinates are unit vectors, so they
    // serve directly as the basis of the quotient
    let mut comp_span = SpanBuilder::new(field, width);
    for b in &a.basis {
        comp_span.insert(rad_span.reduce(b.clone()));
    }
    let classes = comp_span.basis();
    let q = classes.len();
    let class_coords = |v: &[u64]| -> Result<Vec<u64>> {
        let reduced = rad_span.reduce(v.to_vec());
        comp_span
            .coordinates(&reduced)
            .ok_or_else(|| Error::Internal("class escaped the complement span".into()))
    };
    let mut mult = vec![vec![vec![0u64; q]; q]; q];
    for u in 0..q {
        for v in 0..q {
            let prod = mat_from_flat(field, a.n, &classes[u]).matmul(&mat_from_flat(
                field,
                a.n,
                &classes[v],
            ));
            mult[u][v] = class_coords(&flatten(&prod))?;
        }
    }
    if !a.contains_identity {
        return Err(Error::Internal("bar algebra misses its identity".into()));
    }
    let one = class_coords(&flatten(&FpMatrix::identity(field, a.n)))?;
    Ok(Semisimple {
        field,
        dim: q,
        mult,
        one,
    })
}

/// Minimal polynomial of `z` inside a unital subalgebra with identity
/// `one`, via the first linear dependence among its powers.
fn minimal_polynomial(s: &Semisimple, z: &[u64], one: &[u64]) -> Vec<u64> {
    let mut span = SpanBuilder::new(s.field, s.dim);
    let mut powers: Vec<Vec<u64>> = vec![one.to_vec()];
    span.insert(one.to_vec());
    let mut current = one.to_vec();
    loop {
        current = s.mul(&current, z);
        if span.contains(&current) {
            // first dependence: solve over the raw power matrix to read
            // off the monic minimal polynomial
            let d = powers.len();
            let mat = FpMatrix::from_rows(
                s.field,
                (0..s.dim)
                    .map(|i| powers.iter().map(|pw| pw[i]).collect())
                    .collect(),
            );
            let sol = mat.solve(&current).expect("dependence just detected");
            let mut poly = vec![0u64; d + 1];
            for (i, c) in sol.into_iter().enumerate() {
                poly[i] = s.field.neg(c);
            }
            poly[d] = 1;
            return poly;
        }
        span.insert(current.clone());
        powers.push(current.clone());
    }
}

/// Evaluate a dense polynomial at an algebra element (Horner).
fn evaluate(s: &Semisimple, poly: &[u64], z: &[u64], one: &[u64]) -> Vec<u64> {
    let mut acc = vec![0u64; s.dim];
    for &c in poly.iter().rev() {
        acc = s.mul(&acc, z);
        if c != 0 {
            for i in 0..s.dim {
                acc[i] = s.field.add(acc[i], s.field.mul(c, one[i]));
            }
        }
    }
    acc
}

/// Recursively split a commutative semisimple subalgebra (given by a
/// basis and its identity) into primitive idempotents.
fn split_center(
    s: &Semisimple,
    basis: &[Vec<u64>],
    one: &[u64],
    rng: &mut SplitMix64,
    out: &mut Vec<Vec<u64>>,
) -> Result<()> {
    let r = basis.len();
    if r == 0 {
        return Err(Error::Internal("empty center block".into()));
    }
    if r == 1 {
        out.push(one.to_vec());
        return Ok(());
    }
    let k = s.field;
    let mut tries = 0usize;
    let candidate = |rng: &mut SplitMix64, tries: usize| -> Vec<u64> {
        if tries < basis.len() {
            basis[tries].clone()
        } else {
            // seeded random combination
            let mut v = vec![0u64; s.dim];
            for b in basis {
                let c = rng.below(k.p());
                for i in 0..s.dim {
                    v[i] = k.add(v[i], k.mul(c, b[i]));
                }
            }
            v
        }
    };
    loop {
        let z = candidate(rng, tries);
        tries += 1;
        if tries > basis.len() + 64 {
            return Err(Error::Internal(
                "failed to find a splitting element of the center".into(),
            ));
        }
        let mp = minimal_polynomial(s, &z, one);
        let factors = dense::factor(&k, &mp, rng.next_u64());
        if factors.len() == 1 && factors[0].1 == 1 {
            let deg = factors[0].0.len() - 1;
            if deg == r {
                // the center block is a field
                out.push(one.to_vec());
                return Ok(());
            }
            continue; // z generates a proper subfield; try another
        }
        // split off the first factor
        let f1: Vec<u64> = {
            let mut f = factors[0].0.clone();
            for _ in 1..factors[0].1 {
                f = dense::multiply(&k, &f, &factors[0].0);
            }
            f
        };
        let (f2, rem) = dense::divide(&k, &mp, &f1);
        debug_assert!(rem.is_empty());
        let Some(inv) = dense::inverse_mod(&k, &f2, &f1) else {
            continue;
        };
        // e1 = (inv * f2)(z): congruent to 1 mod f1 and 0 mod f2
        let ef = dense::multiply(&k, &inv, &f2);
        let ef = dense::remainder(&k, &ef, &mp);
        let e1 = evaluate(s, &ef, &z, one);
        let mut e2 = one.to_vec();
        for i in 0..s.dim {
            e2[i] = k.sub(e2[i], e1[i]);
        }
        debug_assert_eq!(s.mul(&e1, &e1), e1);
        // split the basis through each idempotent and recurse
        for e in [&e1, &e2] {
            let mut sub_span = SpanBuilder::new(k, s.dim);
            let mut sub_basis = Vec::new();
            for b in basis {
                let be = s.mul(b, e);
                if sub_span.insert(be.clone()) {
                    sub_basis.push(be);
                }
            }
            split_center(s, &sub_basis, e, rng, out)?;
        }
        return Ok(());
    }
}

/// Count the simple blocks of the semisimple quotient and their
/// dimensions (sorted descending).
pub fn simple_blocks(a: &BarAlgebra, seed: u64) -> Result<(usize, Vec<usize>)> {
    let rad = fd_radical(a)?;
    let s = semisimple_quotient(a, &rad)?;
    if s.dim == 0 {
        return Ok((0, Vec::new()));
    }
    // center: solve z * c_u = c_u * z for all u
    let k = s.field;
    let q = s.dim;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for u in 0..q {
        for w in 0..q {
            // coefficient of basis w in (z c_u - c_u z), linear in z
            let row: Vec<u64> = (0..q)
                .map(|v| k.sub(s.mult[v][u][w], s.mult[u][v][w]))
                .collect();
            rows.push(row);
        }
    }
    let commutation = FpMatrix::from_rows(k, rows);
    let center = commutation.kernel_basis();
    let mut rng = SplitMix64::new(seed ^ 0x51ab_3c5d_77e1_90f4);
    let mut idempotents = Vec::new();
    split_center(&s, &center, &s.one, &mut rng, &mut idempotents)?;
    // block dimensions: dim of S e for each primitive central idempotent
    let mut dims = Vec::with_capacity(idempotents.len());
    for e in &idempotents {
        let mut span = SpanBuilder::new(k, q);
        for u in 0..q {
            let mut unit = vec![0u64; q];
            unit[u] = 1;
            span.insert(s.mul(&unit, e));
        }
        dims.push(span.dim());
    }
    dims.sort_unstable_by(|x, y| y.cmp(x));
    debug_assert_eq!(dims.iter().sum::<usize>(), q);
    Ok((idempotents.len(), dims))
}

/// Radical structure summary of `End(E)` at the bar level, and the
/// locality verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalProfile {
    pub dim_bar: usize,
    pub dim_radical: usize,
    pub num_blocks: usize,
    pub block_dims: Vec<usize>,
    pub is_local: bool,
}

/// Decide locality of a nonzero module: one simple block in the
/// semisimple quotient of `End(E)/J0`.
pub fn is_local_module(e: &FPModule, seed: u64) -> Result<RadicalProfile> {
    let e = if e.is_minimal() {
        e.clone()
    } else {
        minimalize(e)?.module
    };
    if e.is_zero_module() || e.generator_count() == 0 {
        return Err(Error::ZeroModule("locality of the zero module".into()));
    }
    let end = end_algebra(&e)?;
    let bar = bar_algebra(&e, &end)?;
    profile_of_bar(&bar, seed)
}

pub fn profile_of_bar(bar: &BarAlgebra, seed: u64) -> Result<RadicalProfile> {
    let rad = fd_radical(bar)?;
    let (num_blocks, block_dims) = simple_blocks(bar, seed)?;
    Ok(RadicalProfile {
        dim_bar: bar.dim(),
        dim_radical: rad.len(),
        num_blocks,
        block_dims,
        is_local: num_blocks == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpmodules::module::direct_sum;
    use crate::polyring::poly::{parse_polynomial, standard_ring};

    fn bar_of(e: &FPModule) -> BarAlgebra {
        let end = end_algebra(e).unwrap();
        bar_algebra(e, &end).unwrap()
    }

    #[test]
    fn bar_of_free_rank_two_is_full_matrix_algebra() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let f = FPModule::free(&r, vec![0, 0]);
        let bar = bar_of(&f);
        assert_eq!(bar.dim(), 4);
        assert!(bar.contains_identity);
        assert!(fd_radical(&bar).unwrap().is_empty());
        let (blocks, dims) = simple_blocks(&bar, 0).unwrap();
        assert_eq!(blocks, 1);
        assert_eq!(dims, vec![4]);
    }

    #[test]
    fn bar_of_cyclic_torsion_is_the_field() {
        let r = standard_ring(32003, &["x"]).unwrap();
        let rx = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let bar = bar_of(&rx);
        assert_eq!(bar.dim(), 1);
        let profile = profile_of_bar(&bar, 0).unwrap();
        assert!(profile.is_local);
        assert_eq!(profile.dim_radical, 0);
    }

    #[test]
    fn bar_of_mixed_sum_is_lower_triangular() {
        // R + R/(x) over F_p[x]: Hom(R/(x), R) = 0 kills one corner, so
        // the bar algebra is 3-dimensional with a 1-dimensional radical
        // and two blocks.
        let r = standard_ring(32003, &["x"]).unwrap();
        let free = FPModule::ring_module(&r);
        let rx = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let sum = direct_sum(&free, &rx).unwrap();
        let bar = bar_of(&sum);
        assert_eq!(bar.dim(), 3);
        let profile = profile_of_bar(&bar, 0).unwrap();
        assert_eq!(profile.dim_radical, 1);
        assert_eq!(profile.num_blocks, 2);
        assert_eq!(profile.block_dims, vec![1, 1]);
        assert!(!profile.is_local);
    }

    #[test]
    fn locality_verdicts_for_free_modules() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        for n in 1..=3usize {
            let f = FPModule::free(&r, vec![0; n]);
            let profile = is_local_module(&f, 0).unwrap();
            assert!(profile.is_local, "free rank {n} must be local");
            assert_eq!(profile.dim_bar, n * n);
        }
    }

    #[test]
    fn zero_module_rejected() {
        let r = standard_ring(32003, &["x"]).unwrap();
        let zero = FPModule::zero_module(&r);
        assert!(is_local_module(&zero, 0).is_err());
    }

    #[test]
    fn two_torsion_lines_are_not_local() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let rx = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let ry = FPModule::cyclic(&r, &[parse_polynomial("y", &r).unwrap()]).unwrap();
        let sum = direct_sum(&rx, &ry).unwrap();
        let profile = is_local_module(&sum, 0).unwrap();
        assert_eq!(profile.num_blocks, 2);
        assert!(!profile.is_local);
    }

    #[test]
    fn radical_of_jordan_block_span() {
        // k[t]/(t^2) realized as the span of the identity and a nilpotent
        // 2x2 Jordan block: radical has dimension 1
        let field = crate::polyring::field::PrimeField::default_field();
        let identity = vec![1, 0, 0, 1];
        let nilpotent = vec![0, 1, 0, 0];
        let a = BarAlgebra {
            n: 2,
            field,
            basis: vec![identity, nilpotent.clone()],
            contains_identity: true,
        };
        let rad = fd_radical(&a).unwrap();
        assert_eq!(rad.len(), 1);
        assert_eq!(rad[0], nilpotent);
        let (blocks, dims) = simple_blocks(&a, 0).unwrap();
        assert_eq!(blocks, 1);
        assert_eq!(dims, vec![1]);
    }

    #[test]
    fn prime_too_small_is_rejected() {
        let field = crate::polyring::field::PrimeField::new(2).unwrap();
        let a = BarAlgebra {
            n: 2,
            field,
            basis: vec![vec![1, 0, 0, 1], vec![0, 1, 0, 0], vec![0, 0, 1, 0]],
            contains_identity: true,
        };
        assert!(matches!(
            fd_radical(&a),
            Err(crate::error::Error::PrimeTooSmall { .. })
        ));
    }
}
