//! The Auslander dual (cokernel of the dualized presentation), trace
//! ideals with the free-summand criterion, and reflexivity via the
//! natural double-dual map.

use crate::error::Result;
use crate::fpmodules::hom::dual;
use crate::fpmodules::module::FPModule;
use crate::fpmodules::morphism::{cokernel_of, kernel_of, minimalize, ModuleMorphism};
use crate::groebner::{syzygy_ambient, syzygy_basis, FreeModule, GroebnerBasis, VectorPoly};
use crate::polyring::poly::Polynomial;

/// `D(E) = coker(phi^* : F0^* -> F1^*)` computed from the minimal
/// presentation `F1 --phi--> F0 -> E -> 0`, which makes the result
/// deterministic (it is only unique up to projective summands otherwise).
pub fn auslander_dual(e: &FPModule) -> Result<FPModule> {
    let min = minimalize(e)?.module;
    let rels = min.relations();
    let ring = e.ring().clone();
    if rels.is_empty() {
        return Ok(FPModule::zero_module(&ring));
    }
    let rel_degrees = min.relation_degrees();
    let ambient = FreeModule::new(&ring, rel_degrees.iter().map(|d| -d).collect());
    let m = rels.len();
    // columns of phi^*: one per generator of F0, entry k = phi[j][k]
    let mut cols = Vec::with_capacity(min.ambient().rank());
    for j in 0..min.ambient().rank() {
        let entries: Vec<(usize, Polynomial)> = rels
            .iter()
            .enumerate()
            .filter_map(|(k, col)| col.entry(j).map(|p| (k, p.clone())))
            .collect();
        let col = VectorPoly::from_entries(m, entries);
        if !col.is_zero() {
            cols.push(col);
        }
    }
    FPModule::new(ambient, cols)
}

/// The trace ideal `tau(E)`: values of all dual witnesses on all
/// generators, presented as a module on those values; plus the
/// free-summand verdict `1 in tau(E)`, decided by Groebner membership of
/// the degree-zero element.
pub struct TraceIdeal {
    pub module: FPModule,
    pub generators: Vec<Polynomial>,
    pub has_free_summand: bool,
}

pub fn trace_ideal(e: &FPModule) -> Result<TraceIdeal> {
    let ring = e.ring().clone();
    let d = dual(e)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for w in d.witnesses() {
        for p in &w.matrix()[0] {
            if !p.is_zero() {
                gens.push(p.clone());
            }
        }
    }
    let rank1 = FreeModule::new(&ring, vec![0]);
    let cols: Vec<VectorPoly> = gens
        .iter()
        .map(|p| VectorPoly::from_entry(1, 0, p.clone()))
        .collect();
    let gb = GroebnerBasis::compute(&rank1, cols.clone())?;
    let one = VectorPoly::unit(1, 0, &ring);
    let has_free_summand = gb.contains(&one)?;
    // present the ideal on its generators
    let ambient = syzygy_ambient(&rank1, &cols);
    let relations = syzygy_basis(&rank1, &cols)?;
    let module = FPModule::new(ambient, relations)?;
    Ok(TraceIdeal {
        module,
        generators: gens,
        has_free_summand,
    })
}

pub fn has_free_summand(e: &FPModule) -> Result<bool> {
    Ok(trace_ideal(e)?.has_free_summand)
}

/// Reflexivity: build the natural map `E -> E**` out of double evaluation
/// against the dual witnesses and test it for isomorphism.
pub fn is_reflexive(e: &FPModule) -> Result<bool> {
    let ring = e.ring().clone();
    let d = dual(e)?;
    let dd = dual(d.module())?;
    let ne = e.ambient().rank();
    let ndual = d.module().ambient().rank();
    let r_module = FPModule::ring_module(&ring);
    let mut matrix = vec![vec![Polynomial::zero(&ring); ne]; dd.module().ambient().rank()];
    for j in 0..ne {
        // evaluation at generator j: a functional on the dual module
        let row: Vec<Polynomial> = (0..ndual)
            .map(|s| d.witnesses()[s].matrix()[0][j].clone())
            .collect();
        let shift = e.ambient().degree(j);
        let ev = ModuleMorphism::new(d.module(), &r_module, vec![row], shift)?;
        let coords = dd.coordinates_of(&ev)?;
        for (u, c) in coords.into_iter().enumerate() {
            matrix[u][j] = c;
        }
    }
    let eta = ModuleMorphism::new(e, dd.module(), matrix, 0)?;
    let ker = kernel_of(&eta)?;
    if !ker.module.is_zero_module() {
        return Ok(false);
    }
    let (coker, _) = cokernel_of(&eta)?;
    Ok(coker.is_zero_module())
}
