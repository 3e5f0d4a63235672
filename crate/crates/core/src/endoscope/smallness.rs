//! Small homomorphisms (image inside `m * target`), the transition
//! conditions for direct-sum decompositions, and the block description of
//! the radical of `End(E1 + E2)` verified at the bar level.

use serde::Serialize;

use crate::error::Result;
use crate::fpmodules::hom::hom;
use crate::fpmodules::module::{direct_sum, FPModule};
use crate::fpmodules::morphism::{minimalize, ModuleMorphism};
use crate::groebner::{GroebnerBasis, VectorPoly};
use crate::linalg::SpanBuilder;
use crate::polyring::poly::Polynomial;

use super::bar::{bar_algebra, bar_matrix, fd_radical, profile_of_bar, RadicalProfile};
use super::end_algebra::{end_algebra, j0, EndAlgebra};

/// Groebner basis of `m * F0 + relations` inside the ambient of `target`.
fn irrelevant_multiple_basis(target: &FPModule) -> Result<GroebnerBasis> {
    let ring = target.ring().clone();
    let r = target.ambient().rank();
    let mut gens = Vec::with_capacity(r * ring.nvars() + target.relations().len());
    for i in 0..r {
        for v in 0..ring.nvars() {
            gens.push(VectorPoly::from_entry(r, i, Polynomial::variable(&ring, v)));
        }
    }
    gens.extend_from_slice(target.relations());
    GroebnerBasis::compute(target.ambient(), gens)
}

/// A homomorphism is small when every generator image lies in
/// `m * F0(target) + relations(target)`, i.e. the image lands in
/// `m * target`.
pub fn is_small(phi: &ModuleMorphism) -> Result<bool> {
    let gb = irrelevant_multiple_basis(phi.target())?;
    for j in 0..phi.source().ambient().rank() {
        if !gb.contains(&phi.column(j))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transition conditions for a pair: every composite through the other
/// module is small, in both directions.
pub fn check_transition(e1: &FPModule, e2: &FPModule) -> Result<bool> {
    let h12 = hom(e1, e2)?;
    let h21 = hom(e2, e1)?;
    let gb1 = irrelevant_multiple_basis(e1)?;
    let gb2 = irrelevant_multiple_basis(e2)?;
    for a in h12.witnesses() {
        for b in h21.witnesses() {
            let ba = b.compose(a)?; // endomorphism of e1
            for j in 0..ba.source().ambient().rank() {
                if !gb1.contains(&ba.column(j))? {
                    return Ok(false);
                }
            }
            let ab = a.compose(b)?; // endomorphism of e2
            for j in 0..ab.source().ambient().rank() {
                if !gb2.contains(&ab.column(j))? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// One block of the radical description of `End(E1 + E2)`.
#[derive(Debug, Clone, Serialize)]
pub struct BlockReport {
    pub name: String,
    pub generators: usize,
    /// every generator's bar image lies in the radical of the bar algebra
    pub verified: bool,
}

/// The assembled radical block description, verified at the bar level
/// where radical membership is decidable.
#[derive(Debug, Clone, Serialize)]
pub struct RadicalBlockProfile {
    pub transition_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<RadicalProfile>,
    pub blocks: Vec<BlockReport>,
    pub pass: bool,
}

/// Embedding and projection morphisms for a two-term direct sum.
fn sum_embeddings(
    e1: &FPModule,
    e2: &FPModule,
    sum: &FPModule,
) -> Result<(
    ModuleMorphism,
    ModuleMorphism,
    ModuleMorphism,
    ModuleMorphism,
)> {
    let ring = e1.ring().clone();
    let r1 = e1.ambient().rank();
    let r2 = e2.ambient().rank();
    let zero = Polynomial::zero(&ring);
    let one = Polynomial::one(&ring);
    let block = |rows: usize, cols: usize, offset_r: usize| -> Vec<Vec<Polynomial>> {
        (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| {
                        if i == j + offset_r {
                            one.clone()
                        } else {
                            zero.clone()
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let inc1 = ModuleMorphism::new(e1, sum, block(r1 + r2, r1, 0), 0)?;
    let inc2 = ModuleMorphism::new(e2, sum, block(r1 + r2, r2, r1), 0)?;
    let proj = |rows: usize, cols: usize, offset_c: usize| -> Vec<Vec<Polynomial>> {
        (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| {
                        if j == i + offset_c {
                            one.clone()
                        } else {
                            zero.clone()
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let pr1 = ModuleMorphism::new(sum, e1, proj(r1, r1 + r2, 0), 0)?;
    let pr2 = ModuleMorphism::new(sum, e2, proj(r2, r1 + r2, r1), 0)?;
    Ok((inc1, inc2, pr1, pr2))
}

/// Lift the radical basis of the bar algebra of `e` back to actual
/// endomorphisms: solve for constant combinations of the shift-zero
/// witnesses whose bars hit the radical basis vectors.
fn radical_lifts(e: &FPModule, end: &EndAlgebra) -> Result<Vec<ModuleMorphism>> {
    let bar = bar_algebra(e, end)?;
    let rad = fd_radical(&bar)?;
    if rad.is_empty() {
        return Ok(Vec::new());
    }
    let field = bar.field;
    let n = bar.n;
    let ring = e.ring().clone();
    let shift_zero: Vec<usize> = end
        .hom
        .witnesses()
        .iter()
        .enumerate()
        .filter(|(_, w)| w.shift() == 0)
        .map(|(u, _)| u)
        .collect();
    let mut span = SpanBuilder::new(field, n * n);
    let mut picked: Vec<(usize, Vec<u64>)> = Vec::new();
    for &u in &shift_zero {
        let m = bar_matrix(field, n, &end.hom.witnesses()[u]);
        let mut flat = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                flat.push(m.at(i, j));
            }
        }
        if span.insert(flat.clone()) {
            picked.push((u, flat));
        }
    }
    let mut lifts = Vec::new();
    for r in &rad {
        let Some(coords) = span.coordinates(r) else {
            return Err(crate::error::Error::Internal(
                "radical element escapes the witness bar span".into(),
            ));
        };
        let mut combo = vec![Polynomial::zero(&ring); end.hom.witnesses().len()];
        for (slot, c) in coords.into_iter().enumerate() {
            if c != 0 {
                combo[picked[slot].0] = Polynomial::constant(&ring, c);
            }
        }
        lifts.push(end.hom.witness_combination(&combo, 0)?);
    }
    Ok(lifts)
}

/// Assemble the four radical blocks of `End(E1 + E2)` and verify every
/// block generator's bar image lies in the radical of the bar algebra of
/// the sum.
pub fn radical_block_profile(
    e1: &FPModule,
    e2: &FPModule,
    seed: u64,
) -> Result<RadicalBlockProfile> {
    let e1 = minimalize(e1)?.module;
    let e2 = minimalize(e2)?.module;
    let transition_ok = check_transition(&e1, &e2)?;
    if !transition_ok {
        return Ok(RadicalBlockProfile {
            transition_ok,
            profile: None,
            blocks: Vec::new(),
            pass: false,
        });
    }
    let sum = direct_sum(&e1, &e2)?;
    let end_sum = end_algebra(&sum)?;
    let bar_sum = bar_algebra(&sum, &end_sum)?;
    let rad_sum = fd_radical(&bar_sum)?;
    let field = bar_sum.field;
    let n = bar_sum.n;
    let mut rad_span = SpanBuilder::new(field, n * n);
    for r in &rad_sum {
        rad_span.insert(r.clone());
    }
    let in_radical = |phi: &ModuleMorphism| -> bool {
        let m = bar_matrix(field, n, phi);
        let mut flat = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                flat.push(m.at(i, j));
            }
        }
        rad_span.contains(&flat)
    };
    let (inc1, inc2, pr1, pr2) = sum_embeddings(&e1, &e2, &sum)?;

    let mut blocks = Vec::new();
    let mut push_block = |name: &str, endos: Vec<ModuleMorphism>| -> Result<()> {
        let verified = endos.iter().all(&in_radical);
        blocks.push(BlockReport {
            name: name.to_string(),
            generators: endos.len(),
            verified,
        });
        Ok(())
    };

    // off-diagonal blocks
    let h21 = hom(&e2, &e1)?;
    let mut offdiag = Vec::new();
    for w in h21.witnesses() {
        offdiag.push(inc1.compose(&w.compose(&pr2)?)?);
    }
    push_block("hom(E2, E1)", offdiag)?;
    let h12 = hom(&e1, &e2)?;
    let mut offdiag = Vec::new();
    for w in h12.witnesses() {
        offdiag.push(inc2.compose(&w.compose(&pr1)?)?);
    }
    push_block("hom(E1, E2)", offdiag)?;

    // diagonal blocks: generators of J0(E_i) plus lifts of the bar-level
    // radical of End(E_i)
    for (name, e, inc, pr) in [
        ("radical(End(E1))", &e1, &inc1, &pr1),
        ("radical(End(E2))", &e2, &inc2, &pr2),
    ] {
        let end_i = end_algebra(e)?;
        let sub0 = j0(e, &end_i)?;
        let mut endos = Vec::new();
        for (u, col) in sub0.inclusion.columns().iter().enumerate() {
            let coords = col.to_column(e.ring());
            let shift = sub0.module.ambient().degree(u);
            let endo = end_i.hom.witness_combination(&coords, shift)?;
            endos.push(inc.compose(&endo.compose(pr)?)?);
        }
        for lift in radical_lifts(e, &end_i)? {
            endos.push(inc.compose(&lift.compose(pr)?)?);
        }
        push_block(name, endos)?;
    }

    let profile = profile_of_bar(&bar_sum, seed)?;
    let pass = blocks.iter().all(|b| b.verified);
    Ok(RadicalBlockProfile {
        transition_ok,
        profile: Some(profile),
        blocks,
        pass,
    })
}
