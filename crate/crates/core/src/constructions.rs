//! Generators for the module families the analysis targets: Koszul cycle
//! modules, modules defined by a single relation, generic determinantal
//! cokernels, and syzygy modules of perfect quotients.

use crate::error::{Error, Result};
use crate::fpmodules::module::FPModule;
use crate::fpmodules::morphism::{kernel_of, minimalize, ModuleMorphism};
use crate::fpmodules::resolution::{ext, free_resolution, Resolution};
use crate::groebner::{FreeModule, VectorPoly};
use crate::polyring::field::PrimeField;
use crate::polyring::poly::{Homogeneity, Polynomial, Ring, RingDescriptor};

/// Ring `F_p[x1..xn]`.
pub fn koszul_ring(field: PrimeField, n: usize) -> Result<Ring> {
    RingDescriptor::new(field, (1..=n).map(|i| format!("x{i}")).collect())
}

/// Subsets of `{0..n-1}` of size `k` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(n, k, v + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

/// The Koszul complex on `x1..xn`: exterior powers with the contraction
/// differential, exterior basis ordered lexicographically, as a complete
/// minimal resolution of `R/(x1..xn)`.
pub fn koszul_complex(field: PrimeField, n: usize) -> Result<Resolution> {
    if n < 1 {
        return Err(Error::Precondition("need at least one variable".into()));
    }
    let ring = koszul_ring(field, n)?;
    let mut frees = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let count = subsets(n, i).len();
        frees.push(FreeModule::new(&ring, vec![i as i64; count]));
    }
    let mut maps = Vec::with_capacity(n);
    for i in 1..=n {
        let rows = subsets(n, i - 1);
        let cols = subsets(n, i);
        let row_index = |s: &[usize]| rows.iter().position(|r| r == s).unwrap();
        let mut matrix = vec![vec![Polynomial::zero(&ring); cols.len()]; rows.len()];
        for (j, s) in cols.iter().enumerate() {
            for (u, &var) in s.iter().enumerate() {
                let mut t = s.clone();
                t.remove(u);
                let sign_pos = u % 2 == 0;
                let x = Polynomial::variable(&ring, var);
                let entry = if sign_pos { x } else { x.neg() };
                matrix[row_index(&t)][j] = entry;
            }
        }
        let source = FPModule::free(&ring, frees[i].degrees().to_vec());
        let target = FPModule::free(&ring, frees[i - 1].degrees().to_vec());
        maps.push(ModuleMorphism::new(&source, &target, matrix, 0)?);
    }
    let module = FPModule::cyclic(
        &ring,
        &(0..n)
            .map(|v| Polynomial::variable(&ring, v))
            .collect::<Vec<_>>(),
    )?;
    Ok(Resolution {
        module,
        frees,
        maps,
        complete: true,
    })
}

/// The cycle module `Z_i = ker(d_i)` of the Koszul complex, minimally
/// presented.
pub fn koszul_cycles(field: PrimeField, n: usize, i: usize) -> Result<FPModule> {
    if i < 1 || i + 1 > n {
        return Err(Error::Precondition(format!(
            "cycle index must satisfy 1 <= i <= n-1, got i={i}, n={n}"
        )));
    }
    let complex = koszul_complex(field, n)?;
    let kernel = kernel_of(&complex.maps[i - 1])?;
    Ok(kernel.module)
}

/// A module presented by a single homogeneous relation column, together
/// with the ideal its entries generate.
pub struct OneRelationModule {
    pub module: FPModule,
    pub ideal_gens: Vec<Polynomial>,
}

pub fn one_relation_module(entries: &[Polynomial]) -> Result<OneRelationModule> {
    if entries.len() < 2 {
        return Err(Error::Precondition(
            "a one-relation module needs at least two entries".into(),
        ));
    }
    let ring = entries[0].ring().clone();
    let mut degree: Option<u32> = None;
    for (i, f) in entries.iter().enumerate() {
        match f.homogeneity() {
            Homogeneity::Homogeneous(d) => match degree {
                None => degree = Some(d),
                Some(e) if e == d => {}
                Some(e) => {
                    return Err(Error::Inhomogeneous(format!(
                        "entry {i} has degree {d}, expected {e}"
                    )))
                }
            },
            Homogeneity::ZeroEveryDegree => {}
            Homogeneity::Inhomogeneous => return Err(Error::Inhomogeneous(format!("entry {i}"))),
        }
    }
    let n = entries.len();
    let col = VectorPoly::from_entries(n, entries.iter().cloned().enumerate().collect());
    let module = FPModule::new(FreeModule::new(&ring, vec![0; n]), vec![col])?;
    Ok(OneRelationModule {
        module,
        ideal_gens: entries.iter().filter(|f| !f.is_zero()).cloned().collect(),
    })
}

/// The cokernel of a generic matrix of independent variables
/// `phi : R^n -> R^m` over `F_p[x_{ij}]`, with the ideal of maximal
/// minors recorded for reports.
pub struct DeterminantalModule {
    pub module: FPModule,
    pub n: usize,
    pub m: usize,
    pub minor_ideal_gens: Vec<Polynomial>,
}

pub fn generic_determinantal(field: PrimeField, n: usize, m: usize) -> Result<DeterminantalModule> {
    if n < 1 || m < n {
        return Err(Error::Precondition(
            "generic determinantal module needs m >= n >= 1".into(),
        ));
    }
    // variables x{row}{col} for the m x n matrix of the presentation
    let names: Vec<String> = (1..=m)
        .flat_map(|r| (1..=n).map(move |c| format!("x{r}{c}")))
        .collect();
    let ring = RingDescriptor::new(field, names)?;
    let var = |r: usize, c: usize| Polynomial::variable(&ring, r * n + c);
    let mut cols = Vec::with_capacity(n);
    for c in 0..n {
        cols.push(VectorPoly::from_entries(
            m,
            (0..m).map(|r| (r, var(r, c))).collect(),
        ));
    }
    let module = FPModule::new(FreeModule::new(&ring, vec![0; m]), cols)?;
    // maximal minors: n x n minors of the m x n matrix
    let mut minors = Vec::new();
    for rows in subsets(m, n) {
        minors.push(minor(&ring, &rows, n, &var)?);
    }
    Ok(DeterminantalModule {
        module,
        n,
        m,
        minor_ideal_gens: minors,
    })
}

fn minor(
    ring: &Ring,
    rows: &[usize],
    n: usize,
    var: &impl Fn(usize, usize) -> Polynomial,
) -> Result<Polynomial> {
    // Laplace expansion along the first column; fine at desk scale.
    fn det(
        ring: &Ring,
        rows: &[usize],
        cols: &[usize],
        var: &impl Fn(usize, usize) -> Polynomial,
    ) -> Result<Polynomial> {
        if rows.is_empty() {
            return Ok(Polynomial::one(ring));
        }
        let mut acc = Polynomial::zero(ring);
        let c = cols[0];
        let rest: Vec<usize> = cols[1..].to_vec();
        for (k, &r) in rows.iter().enumerate() {
            let mut sub_rows = rows.to_vec();
            sub_rows.remove(k);
            let cofactor = det(ring, &sub_rows, &rest, var)?;
            let term = var(r, c).mul(&cofactor)?;
            acc = if k % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        Ok(acc)
    }
    let cols: Vec<usize> = (0..n).collect();
    det(ring, rows, &cols, var)
}

/// Grade of a module: the least `i` with `Ext^i(M, R)` nonzero.
pub fn grade(m: &FPModule) -> Result<usize> {
    let cap = m.ring().nvars() + 1;
    for i in 0..=cap {
        if !ext(m, i)?.is_zero_module() {
            return Ok(i);
        }
    }
    Err(Error::Internal("no nonvanishing Ext found".into()))
}

/// The `k`-th syzygy module of a perfect module `M`: the image of the
/// `k`-th differential of its minimal resolution, minimally presented.
/// Requires `grade(M) = projdim(M)` and `1 <= k < projdim(M)`.
pub fn perfect_syzygy(m: &FPModule, k: usize) -> Result<FPModule> {
    let nvars = m.ring().nvars();
    let res = free_resolution(m, nvars + 1)?;
    if !res.complete {
        return Err(Error::Internal("resolution did not complete".into()));
    }
    let pd = res.length();
    let g = grade(m)?;
    if g != pd {
        return Err(Error::Precondition(format!(
            "module is not perfect: grade {g} != projective dimension {pd}"
        )));
    }
    if k < 1 || k >= pd {
        return Err(Error::Precondition(format!(
            "syzygy index must satisfy 1 <= k < projdim = {pd}, got {k}"
        )));
    }
    // image of d_k, presented on the generators of F_k
    let d = &res.maps[k - 1];
    let source = d.source().clone();
    let cols = res
        .maps
        .get(k)
        .map(|next| next.columns())
        .unwrap_or_default();
    let presented = FPModule::new(source.ambient().clone(), cols)?;
    Ok(minimalize(&presented)?.module)
}
