//! Generator-count report for `End(E)`: the hard bound
//! `nu(End) <= nu(E) nu(E*) + 1`, the sharper two-sided bound for
//! one-relation modules read off the resolution of the relation ideal,
//! and the recorded (not asserted) count formula for generic
//! determinantal modules.

use serde::Serialize;

use crate::error::Result;
use crate::fpmodules::hom::{dual, hom};
use crate::fpmodules::module::FPModule;
use crate::fpmodules::morphism::minimalize;
use crate::fpmodules::resolution::free_resolution;
use crate::groebner::VectorPoly;
use crate::polyring::monomial::binomial;
use crate::polyring::poly::Polynomial;

#[derive(Debug, Clone, Serialize)]
pub struct OneRelationBounds {
    pub beta0: usize,
    pub beta1: usize,
    pub lower: usize,
    pub upper: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeterminantalCount {
    pub n: usize,
    pub m: usize,
    pub formula: usize,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorBoundReport {
    pub nu_e: usize,
    pub nu_dual: usize,
    pub nu_end: usize,
    pub upper_bound: usize,
    pub upper_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_relation: Option<OneRelationBounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinantal: Option<DeterminantalCount>,
    pub pass: bool,
}

/// Recognize a minimal presentation with exactly one relation column on
/// at least two generators and return the ideal of its entries.
fn one_relation_ideal(e: &FPModule) -> Option<Vec<Polynomial>> {
    if e.relations().len() != 1 || e.generator_count() < 2 {
        return None;
    }
    let col = &e.relations()[0];
    Some(col.entries().map(|(_, p)| p.clone()).collect())
}

/// Recognize a generic determinantal presentation: every relation entry a
/// distinct single variable with unit coefficient, covering all the ring
/// variables.
fn determinantal_shape(e: &FPModule) -> Option<(usize, usize)> {
    let m = e.generator_count();
    let n = e.relations().len();
    if n == 0 || m < n {
        return None;
    }
    let nvars = e.ring().nvars();
    if m * n != nvars {
        return None;
    }
    let mut seen = vec![false; nvars];
    for col in e.relations() {
        if col.entries().count() != m {
            return None;
        }
        for (_, p) in col.entries() {
            if p.terms().len() != 1 {
                return None;
            }
            let (c, mono) = &p.terms()[0];
            if *c != 1 || mono.degree() != 1 {
                return None;
            }
            let v = mono.exponents().iter().position(|&x| x > 0).unwrap();
            if seen[v] {
                return None;
            }
            seen[v] = true;
        }
    }
    seen.iter().all(|&s| s).then_some((n, m))
}

pub fn generator_bound_report(e: &FPModule) -> Result<GeneratorBoundReport> {
    let emin = minimalize(e)?.module;
    let nu_e = emin.generator_count();
    let d = dual(&emin)?;
    let nu_dual = d.module().generator_count();
    let end = hom(&emin, &emin)?;
    let nu_end = end.module().generator_count();
    let upper_bound = nu_e * nu_dual + 1;
    let upper_ok = nu_end <= upper_bound;

    let one_relation = match one_relation_ideal(&emin) {
        Some(ideal_gens) => {
            // resolve the ideal as a module on its generators
            let ring = emin.ring().clone();
            let rank1 = crate::groebner::FreeModule::new(&ring, vec![0]);
            let cols: Vec<VectorPoly> = ideal_gens
                .iter()
                .map(|p| VectorPoly::from_entry(1, 0, p.clone()))
                .collect();
            let ambient = crate::groebner::syzygy_ambient(&rank1, &cols);
            let relations = crate::groebner::syzygy_basis(&rank1, &cols)?;
            let ideal_module = FPModule::new(ambient, relations)?;
            let res = free_resolution(&ideal_module, ring.nvars() + 1)?;
            let betti = res.betti();
            let beta0 = betti.first().copied().unwrap_or(0);
            let beta1 = betti.get(1).copied().unwrap_or(0);
            let lower = beta0 * beta1 + 1 - beta0;
            let upper = beta0 * beta1 + 1;
            Some(OneRelationBounds {
                beta0,
                beta1,
                lower,
                upper,
                ok: lower <= nu_end && nu_end <= upper,
            })
        }
        None => None,
    };

    let determinantal = determinantal_shape(&emin).map(|(n, m)| {
        let formula = n * binomial(m as u64, n as u64 + 1) as usize + 1;
        DeterminantalCount {
            n,
            m,
            formula,
            matches: nu_end == formula,
        }
    });

    let pass = upper_ok && one_relation.as_ref().map_or(true, |b| b.ok);
    Ok(GeneratorBoundReport {
        nu_e,
        nu_dual,
        nu_end,
        upper_bound,
        upper_ok,
        one_relation,
        determinantal,
        pass,
    })
}
