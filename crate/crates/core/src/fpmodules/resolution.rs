//! Minimal graded free resolutions and the derived functors computed from
//! them: Ext into the ring, Tor, rank and depth.

use crate::error::{Error, Result};
use crate::fpmodules::hom::{stack_copies, stack_morphism};
use crate::fpmodules::module::{minimal_generator_indices, FPModule};
use crate::fpmodules::morphism::{
    cokernel_of, kernel_of, lift_through, minimalize, ModuleMorphism, SubmoduleResult,
};
use crate::groebner::{syzygy_ambient, syzygy_basis, FreeModule, VectorPoly};
use crate::polyring::poly::Polynomial;

/// A minimal graded free resolution `... -> F_1 -> F_0 -> E -> 0`,
/// truncated at the requested length unless the module's projective
/// dimension is reached first (`complete`).
#[derive(Debug, Clone)]
pub struct Resolution {
    /// minimal presentation of the resolved module
    pub module: FPModule,
    /// `F_0, F_1, ..., F_L`
    pub frees: Vec<FreeModule>,
    /// `d_i : F_i -> F_{i-1}` as morphisms of free modules, `i = 1..=L`
    pub maps: Vec<ModuleMorphism>,
    pub complete: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn betti(&self) -> Vec<usize> {
        self.frees.iter().map(|f| f.rank()).collect()
    }
}

/// Compute the minimal free resolution up to homological degree
/// `max_len` by iterated syzygies of minimal generating sets.
pub fn free_resolution(e: &FPModule, max_len: usize) -> Result<Resolution> {
    let ring = e.ring().clone();
    let min = minimalize(e)?;
    let module = min.module;
    let mut frees = vec![module.ambient().clone()];
    let mut maps: Vec<ModuleMorphism> = Vec::new();
    let mut cols: Vec<VectorPoly> = module.relations().to_vec();
    let mut complete = false;
    loop {
        if cols.is_empty() {
            complete = true;
            break;
        }
        if maps.len() == max_len {
            break;
        }
        let prev = frees.last().unwrap().clone();
        let next = syzygy_ambient(&prev, &cols);
        let source = FPModule::free(&ring, next.degrees().to_vec());
        let target = FPModule::free(&ring, prev.degrees().to_vec());
        let mut matrix = vec![vec![Polynomial::zero(&ring); cols.len()]; prev.rank()];
        for (j, col) in cols.iter().enumerate() {
            for (i, p) in col.entries() {
                matrix[i][j] = p.clone();
            }
        }
        maps.push(ModuleMorphism::new(&source, &target, matrix, 0)?);
        frees.push(next.clone());
        let syz = syzygy_basis(&prev, &cols)?;
        let kept = minimal_generator_indices(&next, &syz)?;
        cols = kept.into_iter().map(|i| syz[i].clone()).collect();
        // syzygies of a minimal generating set lie in m * F
        debug_assert!(cols.iter().all(|c| c
            .entries()
            .all(|(_, p)| p.terms().iter().all(|(_, m)| m.degree() > 0))));
    }
    Ok(Resolution {
        module,
        frees,
        maps,
        complete,
    })
}

fn complete_resolution(e: &FPModule) -> Result<Resolution> {
    let cap = e.ring().nvars() + 1;
    let res = free_resolution(e, cap)?;
    if !res.complete {
        return Err(Error::Internal(
            "resolution over a polynomial ring exceeded the variable-count bound".into(),
        ));
    }
    Ok(res)
}

/// Projective dimension (length of the minimal free resolution).
pub fn projective_dimension(e: &FPModule) -> Result<usize> {
    Ok(complete_resolution(e)?.length())
}

/// Rank: the alternating sum of the Betti numbers.
pub fn rank(e: &FPModule) -> Result<i64> {
    let res = complete_resolution(e)?;
    let mut acc: i64 = 0;
    let mut sign = 1i64;
    for f in &res.frees {
        acc += sign * f.rank() as i64;
        sign = -sign;
    }
    Ok(acc)
}

/// Depth via the graded Auslander-Buchsbaum equality
/// `depth = nvars - projective dimension`. The zero module reports the
/// ring's full depth.
pub fn depth(e: &FPModule) -> Result<i64> {
    let pd = projective_dimension(e)? as i64;
    Ok(e.ring().nvars() as i64 - pd)
}

/// Transpose of a free-module morphism, as a morphism of the dual frees.
fn dual_map(d: &ModuleMorphism) -> Result<ModuleMorphism> {
    let ring = d.ring();
    let source_dual = FPModule::free(ring, d.target().ambient().dual().degrees().to_vec());
    let target_dual = FPModule::free(ring, d.source().ambient().dual().degrees().to_vec());
    let rows = d.source().ambient().rank();
    let cols = d.target().ambient().rank();
    let mut matrix = vec![vec![Polynomial::zero(ring); cols]; rows];
    for (i, row) in d.matrix().iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            matrix[j][i] = entry.clone();
        }
    }
    ModuleMorphism::new(&source_dual, &target_dual, matrix, 0)
}

/// `Ext^i(E, R)`: cohomology of the dualized minimal resolution at spot
/// `i`, presented as a subquotient.
pub fn ext(e: &FPModule, i: usize) -> Result<FPModule> {
    let ring = e.ring().clone();
    let res = complete_resolution(e)?;
    let len = res.length();
    if i > len {
        return Ok(FPModule::zero_module(&ring));
    }
    // kernel of the outgoing dual map
    let cycle: SubmoduleResult = if i < len {
        let delta_out = dual_map(&res.maps[i])?;
        kernel_of(&delta_out)?
    } else {
        let free = FPModule::free(&ring, res.frees[len].dual().degrees().to_vec());
        SubmoduleResult {
            inclusion: ModuleMorphism::identity(&free),
            module: free,
        }
    };
    if i == 0 {
        return Ok(cycle.module);
    }
    // quotient by the image of the incoming dual map
    let delta_in = dual_map(&res.maps[i - 1])?;
    let lifted = lift_through(&delta_in, &cycle.inclusion)?;
    Ok(cokernel_of(&lifted)?.0)
}

/// `Tor_i(A, B)`: homology of the minimal resolution of `A` tensored with
/// `B`.
pub fn tor(a: &FPModule, b: &FPModule, i: usize) -> Result<FPModule> {
    if !crate::polyring::poly::same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring().clone();
    let res = complete_resolution(a)?;
    let len = res.length();
    if i > len {
        return Ok(FPModule::zero_module(&ring));
    }
    let rb = b.ambient().rank();
    let term = |j: usize| stack_copies(b, res.frees[j].degrees());
    let map = |j: usize| -> Result<ModuleMorphism> {
        // d_j (x) id_B : T_j -> T_{j-1}
        let d = &res.maps[j - 1];
        let source = term(j);
        let target = term(j - 1);
        let dm = d.matrix();
        stack_morphism(
            &source,
            &target,
            rb,
            |u, k| dm[k][u].clone(),
            res.frees[j].rank(),
            res.frees[j - 1].rank(),
        )
    };
    if i == 0 {
        if len == 0 {
            return Ok(term(0));
        }
        return Ok(cokernel_of(&map(1)?)?.0);
    }
    let cycles = kernel_of(&map(i)?)?;
    if i == len {
        return Ok(cycles.module);
    }
    let lifted = lift_through(&map(i + 1)?, &cycles.inclusion)?;
    Ok(cokernel_of(&lifted)?.0)
}
