//! Finitely presented graded modules: cokernels of maps between graded
//! free modules, with the Groebner basis of the relation submodule cached.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{FreeModule, GroebnerBasis, IncrementalBasis, ModHomogeneity, VectorPoly};
use crate::polyring::monomial::{monomial_count, monomials_of_degree};
use crate::polyring::poly::{Polynomial, Ring};

/// A finitely presented graded module `coker(relations -> ambient)`.
///
/// `minimal` records that every relation entry has positive degree, i.e.
/// the relations lie inside `m * ambient`. In the graded setting that
/// makes the ambient rank equal to the minimal number of generators.
#[derive(Debug, Clone)]
pub struct FPModule {
    ambient: FreeModule,
    relations: Vec<VectorPoly>,
    gb: Arc<GroebnerBasis>,
    minimal: bool,
}

impl PartialEq for FPModule {
    fn eq(&self, other: &Self) -> bool {
        self.ambient.same_as(&other.ambient) && self.relations == other.relations
    }
}

impl Eq for FPModule {}

impl FPModule {
    /// Validate and build a module. Every relation column must be
    /// homogeneous relative to the ambient generator degrees.
    pub fn new(ambient: FreeModule, relations: Vec<VectorPoly>) -> Result<FPModule> {
        for (k, col) in relations.iter().enumerate() {
            if col.rank() != ambient.rank() {
                return Err(Error::AmbientMismatch);
            }
            if let ModHomogeneity::Inhomogeneous = col.homogeneity(&ambient) {
                let pos = col.entries().map(|(p, _)| p).next().unwrap_or(0);
                return Err(Error::Inhomogeneous(format!(
                    "relation column {k} (first entry at position {pos})"
                )));
            }
        }
        let relations: Vec<VectorPoly> = relations.into_iter().filter(|c| !c.is_zero()).collect();
        let gb = GroebnerBasis::compute(&ambient, relations.clone())?;
        let minimal = relations.iter().all(|col| {
            col.entries()
                .all(|(_, p)| p.terms().iter().all(|(_, m)| m.degree() > 0))
        });
        Ok(FPModule {
            ambient,
            relations,
            gb: Arc::new(gb),
            minimal,
        })
    }

    /// The free module of the given generator degrees, as a module with no
    /// relations.
    pub fn free(ring: &Ring, degrees: Vec<i64>) -> FPModule {
        FPModule::new(FreeModule::new(ring, degrees), Vec::new())
            .expect("free module is always valid")
    }

    /// The ring itself: free of rank one, generated in degree zero.
    pub fn ring_module(ring: &Ring) -> FPModule {
        FPModule::free(ring, vec![0])
    }

    pub fn zero_module(ring: &Ring) -> FPModule {
        FPModule::free(ring, Vec::new())
    }

    /// The residue field `R/m`.
    pub fn residue_field(ring: &Ring) -> FPModule {
        let ambient = FreeModule::new(ring, vec![0]);
        let relations = (0..ring.nvars())
            .map(|v| VectorPoly::from_entry(1, 0, Polynomial::variable(ring, v)))
            .collect();
        FPModule::new(ambient, relations).expect("residue field presentation")
    }

    /// Cyclic quotient `R/(f1, ..., fk)`.
    pub fn cyclic(ring: &Ring, ideal_gens: &[Polynomial]) -> Result<FPModule> {
        let ambient = FreeModule::new(ring, vec![0]);
        let relations = ideal_gens
            .iter()
            .map(|f| VectorPoly::from_entry(1, 0, f.clone()))
            .collect();
        FPModule::new(ambient, relations)
    }

    pub fn ring(&self) -> &Ring {
        self.ambient.ring()
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn relations(&self) -> &[VectorPoly] {
        &self.relations
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn generator_count(&self) -> usize {
        self.ambient.rank()
    }

    /// Degrees of the relation columns as elements of the ambient module.
    pub fn relation_degrees(&self) -> Vec<i64> {
        self.relations
            .iter()
            .map(|c| c.degree_in(&self.ambient).expect("validated homogeneous"))
            .collect()
    }

    /// True when the module is zero: every ambient generator lies in the
    /// relation submodule.
    pub fn is_zero_module(&self) -> bool {
        (0..self.ambient.rank()).all(|i| {
            let e = VectorPoly::unit(self.ambient.rank(), i, self.ring());
            self.gb.contains(&e).unwrap_or(false)
        })
    }

    /// Dimension of the graded piece in each degree of `[lo, hi]`.
    pub fn hilbert_function(&self, lo: i64, hi: i64) -> HilbertFunction {
        debug_assert!(lo <= hi);
        let ring = self.ring();
        let nvars = ring.nvars();
        // divisibility-minimal leading terms per position
        let lts = self.gb.leading_terms();
        let mut per_pos: Vec<Vec<&crate::polyring::monomial::Monomial>> =
            vec![Vec::new(); self.ambient.rank()];
        for t in &lts {
            per_pos[t.pos].push(&t.mono);
        }
        for list in per_pos.iter_mut() {
            let mut minimal: Vec<&crate::polyring::monomial::Monomial> = Vec::new();
            for m in list.iter() {
                if !minimal.iter().any(|n| n.divides(m)) {
                    minimal.retain(|n| !m.divides(n));
                    minimal.push(m);
                }
            }
            *list = minimal;
        }
        let mut dims = Vec::with_capacity((hi - lo + 1) as usize);
        for d in lo..=hi {
            let mut dim: i64 = 0;
            for (pos, lead) in per_pos.iter().enumerate() {
                let local = d - self.ambient.degree(pos);
                if local < 0 {
                    continue;
                }
                if lead.is_empty() {
                    dim += monomial_count(nvars, local) as i64;
                    continue;
                }
                for mono in monomials_of_degree(nvars, local as u32) {
                    if !lead.iter().any(|l| l.divides(&mono)) {
                        dim += 1;
                    }
                }
            }
            dims.push(dim as u64);
        }
        HilbertFunction { lo, hi, dims }
    }

    /// Twist the grading: generator and relation degrees all shift by `t`,
    /// so `twist(t)` is the module `M(-t)` with `M(-t)_d = M_{d-t}`.
    pub fn twist(&self, t: i64) -> FPModule {
        let degrees = self.ambient.degrees().iter().map(|d| d + t).collect();
        let ambient = FreeModule::new(self.ring(), degrees);
        FPModule::new(ambient, self.relations.clone()).expect("twist preserves validity")
    }
}

/// Exact dimensions of graded pieces over a degree window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunction {
    pub lo: i64,
    pub hi: i64,
    pub dims: Vec<u64>,
}

impl HilbertFunction {
    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }

    pub fn at(&self, d: i64) -> u64 {
        if d < self.lo || d > self.hi {
            0
        } else {
            self.dims[(d - self.lo) as usize]
        }
    }
}

/// Comparison window for Hilbert-function fidelity checks: one below the
/// smallest generator degree up to six past the largest generator or
/// relation degree seen in any participant.
pub fn default_window(modules: &[&FPModule]) -> (i64, i64) {
    let mut lo = 0i64;
    let mut hi = 0i64;
    for m in modules {
        for &d in m.ambient().degrees() {
            lo = lo.min(d - 1);
            hi = hi.max(d);
        }
        for d in m.relation_degrees() {
            hi = hi.max(d);
        }
    }
    (lo, hi + 6)
}

pub fn hf_equal(a: &FPModule, b: &FPModule, lo: i64, hi: i64) -> bool {
    a.hilbert_function(lo, hi) == b.hilbert_function(lo, hi)
}

/// Select a minimal generating subset of homogeneous columns, preserving
/// earlier columns when degrees tie. Returns the indices kept.
pub fn minimal_generator_indices(ambient: &FreeModule, cols: &[VectorPoly]) -> Result<Vec<usize>> {
    let mut order: Vec<usize> = (0..cols.len()).filter(|&i| !cols[i].is_zero()).collect();
    let degree_of = |i: usize| -> Result<i64> { cols[i].degree_in(ambient) };
    for &i in &order {
        degree_of(i)?;
    }
    order.sort_by_key(|&i| (cols[i].degree_in(ambient).unwrap(), i));
    let mut basis = IncrementalBasis::new(ambient);
    let mut kept = Vec::new();
    for i in order {
        if !basis.reduces_to_zero(&cols[i]) {
            basis.add_generator(cols[i].clone());
            kept.push(i);
        }
    }
    kept.sort_unstable();
    Ok(kept)
}

/// Result of minimalizing a presentation: the minimal module plus the
/// change-of-presentation isomorphisms in both directions (their matrices;
/// morphism objects are built by the caller to avoid a cyclic dependency).
#[derive(Debug, Clone)]
pub struct MinimalPresentation {
    pub module: FPModule,
    /// surviving generator indices of the original ambient
    pub kept: Vec<usize>,
    /// matrix of `E -> E_min` (rows over kept generators, columns over
    /// original generators)
    pub to_matrix: Vec<Vec<Polynomial>>,
    /// matrix of `E_min -> E` (rows over original generators, columns over
    /// kept generators)
    pub from_matrix: Vec<Vec<Polynomial>>,
}

/// Graded minimalization: repeatedly eliminate generators against unit
/// relation entries, then prune the relation list to a minimal generating
/// set of the relation submodule.
pub fn minimal_presentation(module: &FPModule) -> Result<MinimalPresentation> {
    let ring = module.ring().clone();
    let rank0 = module.ambient().rank();
    let mut degrees: Vec<i64> = module.ambient().degrees().to_vec();
    let mut labels: Vec<usize> = (0..rank0).collect();
    let mut cols: Vec<VectorPoly> = module.relations().to_vec();
    // running change-of-presentation matrices
    let mut to_m: Vec<Vec<Polynomial>> = (0..rank0)
        .map(|i| {
            (0..rank0)
                .map(|j| {
                    if i == j {
                        Polynomial::one(&ring)
                    } else {
                        Polynomial::zero(&ring)
                    }
                })
                .collect()
        })
        .collect();
    let mut from_m = to_m.clone();

    loop {
        // find a unit entry (first column, then lowest generator index)
        let mut found: Option<(usize, usize, u64)> = None;
        'scan: for (k, col) in cols.iter().enumerate() {
            for (pos, p) in col.entries() {
                if let Some((c, m)) = p.terms().first().map(|(c, m)| (*c, m)) {
                    // entries are homogeneous: a constant term means the
                    // whole entry is the constant
                    if m.degree() == 0 {
                        found = Some((k, pos, c));
                        break 'scan;
                    }
                }
            }
        }
        let Some((k, pos, c)) = found else { break };
        let rank = degrees.len();
        let field = *ring.field();
        let cinv = field.inv(c);
        let pivot_col = cols[k].clone();
        // substitution: e_pos = -c^{-1} * sum_{t != pos} pivot[t] e_t
        let mut subst: Vec<Polynomial> = vec![Polynomial::zero(&ring); rank];
        for (t, p) in pivot_col.entries() {
            if t != pos {
                subst[t] = p.scale(field.neg(cinv));
            }
        }
        // rewrite the other columns and drop row `pos` and column `k`
        let mut new_cols = Vec::with_capacity(cols.len() - 1);
        for (k2, col) in cols.iter().enumerate() {
            if k2 == k {
                continue;
            }
            let mut col2 = col.clone();
            if let Some(p) = col.entry(pos) {
                let factor = p.scale(cinv).neg();
                col2 = col2.add(&pivot_col.mul_poly(&factor)?);
            }
            debug_assert!(col2.entry(pos).is_none());
            // reindex positions above `pos`
            let entries = col2
                .entries()
                .map(|(t, p)| (if t > pos { t - 1 } else { t }, p.clone()))
                .collect();
            let col2 = VectorPoly::from_entries(rank - 1, entries);
            if !col2.is_zero() {
                new_cols.push(col2);
            }
        }
        cols = new_cols;
        // update to_m: project through the substitution
        let removed_row = to_m.remove(pos);
        for (t, row) in to_m.iter_mut().enumerate() {
            let t_orig = if t >= pos { t + 1 } else { t };
            let s = &subst[t_orig];
            if s.is_zero() {
                continue;
            }
            for j in 0..rank0 {
                if !removed_row[j].is_zero() {
                    row[j] = row[j].add(&removed_row[j].mul(s)?);
                }
            }
        }
        // update from_m: the surviving generators keep their images, the
        // eliminated generator's column is dropped (its relation encodes
        // the substitution)
        for row in from_m.iter_mut() {
            row.remove(pos);
        }
        degrees.remove(pos);
        labels.remove(pos);
    }

    // prune the relation list to a minimal generating set
    let ambient = FreeModule::new(&ring, degrees);
    let kept_cols = minimal_generator_indices(&ambient, &cols)?;
    let cols: Vec<VectorPoly> = kept_cols.into_iter().map(|i| cols[i].clone()).collect();
    let module = FPModule::new(ambient, cols)?;
    Ok(MinimalPresentation {
        module,
        kept: labels,
        to_matrix: to_m,
        from_matrix: from_m,
    })
}

/// Block-diagonal direct sum.
pub fn direct_sum(a: &FPModule, b: &FPModule) -> Result<FPModule> {
    if !crate::polyring::poly::same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ra = a.ambient().rank();
    let rb = b.ambient().rank();
    let mut degrees = a.ambient().degrees().to_vec();
    degrees.extend_from_slice(b.ambient().degrees());
    let ambient = FreeModule::new(a.ring(), degrees);
    let mut relations = Vec::with_capacity(a.relations().len() + b.relations().len());
    for col in a.relations() {
        relations.push(VectorPoly::from_entries(
            ra + rb,
            col.entries().map(|(p, q)| (p, q.clone())).collect(),
        ));
    }
    for col in b.relations() {
        relations.push(VectorPoly::from_entries(
            ra + rb,
            col.entries().map(|(p, q)| (p + ra, q.clone())).collect(),
        ));
    }
    FPModule::new(ambient, relations)
}

/// Standard presentation of the tensor product: ambient is the tensor of
/// the ambients, relations are `rel(A) (x) id` and `id (x) rel(B)`.
pub fn tensor(a: &FPModule, b: &FPModule) -> Result<FPModule> {
    if !crate::polyring::poly::same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ra = a.ambient().rank();
    let rb = b.ambient().rank();
    let mut degrees = Vec::with_capacity(ra * rb);
    for i in 0..ra {
        for j in 0..rb {
            degrees.push(a.ambient().degree(i) + b.ambient().degree(j));
        }
    }
    let ambient = FreeModule::new(a.ring(), degrees);
    let mut relations = Vec::new();
    for col in a.relations() {
        for j in 0..rb {
            relations.push(VectorPoly::from_entries(
                ra * rb,
                col.entries()
                    .map(|(i, q)| (i * rb + j, q.clone()))
                    .collect(),
            ));
        }
    }
    for col in b.relations() {
        for i in 0..ra {
            relations.push(VectorPoly::from_entries(
                ra * rb,
                col.entries()
                    .map(|(j, q)| (i * rb + j, q.clone()))
                    .collect(),
            ));
        }
    }
    FPModule::new(ambient, relations)
}
