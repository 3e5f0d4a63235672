//! Hom modules computed as kernels: for `A` presented by `F1 -> F0`,
//! `Hom(A, B)` is the kernel of the induced map `B (x) F0* -> B (x) F1*`.
//! Each generator of the kernel is materialized as an actual morphism
//! `A -> B` (its witness), and arbitrary well-defined morphisms can be
//! expressed in coordinates over the generators.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fpmodules::module::{tensor, FPModule};
use crate::fpmodules::morphism::{kernel_of, minimalize, ModuleMorphism};
use crate::groebner::{FreeModule, GroebnerBasis, VectorPoly};
use crate::polyring::poly::Polynomial;

/// Direct sum of copies of `b`, one per entry of `offsets`, with the copy
/// for offset `o` twisted so its generators sit in degrees `deg + o`.
pub(crate) fn stack_copies(b: &FPModule, offsets: &[i64]) -> FPModule {
    let ring = b.ring();
    let rb = b.ambient().rank();
    let mut degrees = Vec::with_capacity(offsets.len() * rb);
    for &o in offsets {
        for i in 0..rb {
            degrees.push(b.ambient().degree(i) + o);
        }
    }
    let ambient = FreeModule::new(ring, degrees);
    let mut relations = Vec::with_capacity(offsets.len() * b.relations().len());
    for (copy, _) in offsets.iter().enumerate() {
        for col in b.relations() {
            relations.push(VectorPoly::from_entries(
                offsets.len() * rb,
                col.entries()
                    .map(|(i, q)| (copy * rb + i, q.clone()))
                    .collect(),
            ));
        }
    }
    FPModule::new(ambient, relations).expect("stack of validated module")
}

/// Block morphism between stacks of `b`: block `(k, j)` is multiplication
/// by `scalars[j][k]` on the copy.
pub(crate) fn stack_morphism(
    source: &FPModule,
    target: &FPModule,
    b_rank: usize,
    scalars: impl Fn(usize, usize) -> Polynomial,
    source_copies: usize,
    target_copies: usize,
) -> Result<ModuleMorphism> {
    let ring = source.ring();
    let mut matrix =
        vec![vec![Polynomial::zero(ring); source_copies * b_rank]; target_copies * b_rank];
    for k in 0..target_copies {
        for j in 0..source_copies {
            let s = scalars(j, k);
            if s.is_zero() {
                continue;
            }
            for i in 0..b_rank {
                matrix[k * b_rank + i][j * b_rank + i] = s.clone();
            }
        }
    }
    ModuleMorphism::new(source, target, matrix, 0)
}

/// `Hom(A, B)` as a minimally presented module together with one morphism
/// witness per generator.
pub struct HomModule {
    module: FPModule,
    witnesses: Vec<ModuleMorphism>,
    /// A_min -> A and B -> B_min transports for coordinate queries
    a_from_min: ModuleMorphism,
    b_to_min: ModuleMorphism,
    n: usize,
    rb: usize,
    /// kernel generators in the stacked ambient, plus the stack relations,
    /// as a basis for expressing stacked morphisms
    stack_source: FPModule,
    kernel_gens: Vec<VectorPoly>,
    lift_gb: OnceLock<GroebnerBasis>,
}

impl HomModule {
    pub fn module(&self) -> &FPModule {
        &self.module
    }

    pub fn witnesses(&self) -> &[ModuleMorphism] {
        &self.witnesses
    }

    /// Generator degrees double as witness shifts.
    pub fn shifts(&self) -> &[i64] {
        self.module.ambient().degrees()
    }

    fn lift_basis(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.lift_gb.get() {
            return Ok(gb);
        }
        let mut gens = self.kernel_gens.clone();
        gens.extend_from_slice(self.stack_source.relations());
        let gb = GroebnerBasis::compute(self.stack_source.ambient(), gens)?;
        let _ = self.lift_gb.set(gb);
        Ok(self.lift_gb.get().expect("just set"))
    }

    /// Coordinates of a well-defined morphism over the Hom generators: the
    /// returned `c` satisfies `phi = sum c[u] * witness[u]` as morphisms.
    pub fn coordinates_of(&self, phi: &ModuleMorphism) -> Result<Vec<Polynomial>> {
        let phi_min = self.b_to_min.compose(&phi.compose(&self.a_from_min)?)?;
        let mut entries = Vec::with_capacity(self.n * self.rb);
        for j in 0..self.n {
            for i in 0..self.rb {
                let p = &phi_min.matrix()[i][j];
                if !p.is_zero() {
                    entries.push((j * self.rb + i, p.clone()));
                }
            }
        }
        let stacked = VectorPoly::from_entries(self.n * self.rb, entries);
        let gb = self.lift_basis()?;
        let Some(coeffs) = gb.coefficients_over_generators(&stacked)? else {
            return Err(Error::Internal(
                "morphism does not lift over the Hom generators".into(),
            ));
        };
        Ok(coeffs[..self.kernel_gens.len()].to_vec())
    }

    /// Materialize a coordinate vector as the morphism `sum c[u] w[u]`.
    /// `shift` fixes the shift when every coordinate is zero.
    pub fn witness_combination(&self, coords: &[Polynomial], shift: i64) -> Result<ModuleMorphism> {
        debug_assert_eq!(coords.len(), self.witnesses.len());
        let mut acc: Option<ModuleMorphism> = None;
        for (u, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = self.witnesses[u].scale_poly(c)?;
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
        }
        Ok(match acc {
            Some(a) => a,
            None => ModuleMorphism::zero(self.a_from_min.target(), self.b_to_min.source(), shift),
        })
    }
}

/// Compute `Hom(A, B)` from minimal presentations of both arguments.
pub fn hom(a: &FPModule, b: &FPModule) -> Result<HomModule> {
    if !crate::polyring::poly::same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let amin = minimalize(a)?;
    let bmin = minimalize(b)?;
    let n = amin.module.ambient().rank();
    let rb = bmin.module.ambient().rank();
    let rels_a = amin.module.relations();
    let m = rels_a.len();

    // source stack: one copy of B_min per generator of A_min
    let source_offsets: Vec<i64> = (0..n).map(|j| -amin.module.ambient().degree(j)).collect();
    let stack_source = stack_copies(&bmin.module, &source_offsets);
    // target stack: one copy per relation of A_min
    let rel_degrees = amin.module.relation_degrees();
    let target_offsets: Vec<i64> = rel_degrees.iter().map(|d| -d).collect();
    let stack_target = stack_copies(&bmin.module, &target_offsets);
    let ring = a.ring().clone();
    let psi = stack_morphism(
        &stack_source,
        &stack_target,
        rb,
        |j, k| {
            rels_a[k]
                .entry(j)
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(&ring))
        },
        n,
        m,
    )?;

    let kernel = kernel_of(&psi)?;
    let module = kernel.module;
    let kernel_gens = kernel.inclusion.columns();

    // materialize witnesses and transport them to the original modules
    let mut witnesses = Vec::with_capacity(kernel_gens.len());
    for (u, cu) in kernel_gens.iter().enumerate() {
        let mut matrix = vec![vec![Polynomial::zero(&ring); n]; rb];
        for (slot, p) in cu.entries() {
            let j = slot / rb;
            let i = slot % rb;
            matrix[i][j] = p.clone();
        }
        let shift = module.ambient().degree(u);
        let w = ModuleMorphism::new(&amin.module, &bmin.module, matrix, shift)?;
        let transported = bmin.from_min.compose(&w.compose(&amin.to_min)?)?;
        witnesses.push(transported);
    }

    Ok(HomModule {
        module,
        witnesses,
        a_from_min: amin.from_min,
        b_to_min: bmin.to_min,
        n,
        rb,
        stack_source,
        kernel_gens,
        lift_gb: OnceLock::new(),
    })
}

/// The dual module `E* = Hom(E, R)`.
pub fn dual(e: &FPModule) -> Result<HomModule> {
    let r = FPModule::ring_module(e.ring());
    hom(e, &r)
}

/// The natural evaluation map `E* (x) X -> Hom(E, X)` sending `f (x) x` to
/// the morphism `e -> f(e) x`. Returns the map together with its source
/// (the tensor presentation) and the Hom data of both sides.
pub struct NaturalHomMap {
    pub map: ModuleMorphism,
    pub source: FPModule,
    pub dual_e: HomModule,
    pub hom_ex: HomModule,
}

pub fn natural_hom_map(e: &FPModule, x: &FPModule) -> Result<NaturalHomMap> {
    let ring = e.ring().clone();
    let dual_e = dual(e)?;
    let hom_ex = hom(e, x)?;
    let source = tensor(dual_e.module(), x)?;
    let rx = x.ambient().rank();
    let ne = e.ambient().rank();
    let ndual = dual_e.module().ambient().rank();
    let nhom = hom_ex.module().ambient().rank();
    let mut matrix = vec![vec![Polynomial::zero(&ring); ndual * rx]; nhom];
    for s in 0..ndual {
        let f = &dual_e.witnesses()[s];
        for t in 0..rx {
            // morphism e_j -> f(e_j) * x_t
            let mut g = vec![vec![Polynomial::zero(&ring); ne]; x.ambient().rank()];
            g[t] = (0..ne).map(|j| f.matrix()[0][j].clone()).collect();
            let shift = f.shift() + x.ambient().degree(t);
            let morphism = ModuleMorphism::new(e, x, g, shift)?;
            let coords = hom_ex.coordinates_of(&morphism)?;
            for (u, c) in coords.into_iter().enumerate() {
                matrix[u][s * rx + t] = c;
            }
        }
    }
    let map = ModuleMorphism::new(&source, hom_ex.module(), matrix, 0)?;
    Ok(NaturalHomMap {
        map,
        source,
        dual_e,
        hom_ex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpmodules::module::{hf_equal, FPModule};
    use crate::fpmodules::morphism::{cokernel_of, kernel_of};
    use crate::polyring::poly::{parse_polynomial, standard_ring, Ring};

    fn r1() -> Ring {
        standard_ring(32003, &["x"]).unwrap()
    }

    fn r2() -> Ring {
        standard_ring(32003, &["x", "y"]).unwrap()
    }

    #[test]
    fn hom_from_ring_is_the_module_itself() {
        let r = r2();
        let b = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let h = hom(&FPModule::ring_module(&r), &b).unwrap();
        assert!(hf_equal(h.module(), &b, -1, 5));
        assert_eq!(h.witnesses().len(), 1);
    }

    #[test]
    fn endomorphisms_of_cyclic_torsion_module() {
        let r = r1();
        let rx = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let h = hom(&rx, &rx).unwrap();
        assert_eq!(h.module().generator_count(), 1);
        assert!(hf_equal(h.module(), &rx, -1, 4));
        // the witness is the identity map
        let id = ModuleMorphism::identity(&rx);
        assert!(h.witnesses()[0].equal_as_morphisms(&id).unwrap());
        let coords = h.coordinates_of(&id).unwrap();
        assert_eq!(coords.len(), 1);
        assert!(!coords[0].is_zero());
    }

    #[test]
    fn no_morphisms_from_torsion_into_free() {
        let r = r1();
        let rx = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let h = hom(&rx, &FPModule::ring_module(&r)).unwrap();
        assert!(h.module().is_zero_module());
        assert_eq!(h.module().generator_count(), 0);
    }

    #[test]
    fn dual_of_free_is_free() {
        let r = r2();
        let f = FPModule::free(&r, vec![0, 0]);
        let d = dual(&f).unwrap();
        assert_eq!(d.module().generator_count(), 2);
        assert!(d.module().relations().is_empty());
    }

    #[test]
    fn dual_of_maximal_ideal_is_free_of_rank_one() {
        // the ideal (x, y) in two variables has dual isomorphic to R
        let r = r2();
        let ambient = FreeModule::new(&r, vec![1, 1]);
        let rel = VectorPoly::from_entries(
            2,
            vec![
                (0, parse_polynomial("y", &r).unwrap()),
                (1, parse_polynomial("-x", &r).unwrap()),
            ],
        );
        let ideal = FPModule::new(ambient, vec![rel]).unwrap();
        let d = dual(&ideal).unwrap();
        let free = FPModule::ring_module(&r);
        assert!(hf_equal(d.module(), &free, -2, 6));
    }

    #[test]
    fn natural_map_iso_for_free_modules() {
        let r = r2();
        let f = FPModule::free(&r, vec![0, 1]);
        let nat = natural_hom_map(&f, &f).unwrap();
        let ker = kernel_of(&nat.map).unwrap();
        let (coker, _) = cokernel_of(&nat.map).unwrap();
        assert!(ker.module.is_zero_module());
        assert!(coker.is_zero_module());
    }

    #[test]
    fn natural_map_between_torsion_modules() {
        let r = r1();
        let rx = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        // E = X = R/(x): the dual vanishes, so the evaluation map is
        // 0 -> Hom(E, X) and its cokernel is all of End(E) = R/(x).
        // That cokernel is exactly the Tor_1 defect module.
        let nat = natural_hom_map(&rx, &rx).unwrap();
        assert!(nat.source.is_zero_module());
        let ker = kernel_of(&nat.map).unwrap();
        let (coker, _) = cokernel_of(&nat.map).unwrap();
        assert!(ker.module.is_zero_module());
        assert!(hf_equal(&coker, &rx, -1, 4));
    }

    #[test]
    fn natural_map_source_zero_when_dual_vanishes() {
        let r = r1();
        let rx = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let free = FPModule::ring_module(&r);
        // E = R/(x), X = R: dual(E) = 0 so the tensor side is zero and the
        // Hom side is zero as well
        let nat = natural_hom_map(&rx, &free).unwrap();
        assert!(nat.source.is_zero_module());
        assert!(nat.hom_ex.module().is_zero_module());
    }

    #[test]
    fn hom_transports_witnesses_through_nonminimal_presentations() {
        // A presented redundantly: R^2 with the unit relation (1, x),
        // isomorphic to a twisted free module of rank one
        let r = r2();
        let col = VectorPoly::from_entries(
            2,
            vec![
                (0, Polynomial::one(&r)),
                (1, parse_polynomial("x", &r).unwrap()),
            ],
        );
        let a = FPModule::new(FreeModule::new(&r, vec![0, -1]), vec![col]).unwrap();
        assert!(!a.is_minimal());
        let b = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let h = hom(&a, &b).unwrap();
        // Hom(R(1), R/(x)) has one generator; its witness is a morphism
        // on the presentation as given (two source generators)
        assert_eq!(h.module().generator_count(), 1);
        let w = &h.witnesses()[0];
        assert_eq!(w.matrix()[0].len(), 2);
        let coords = h.coordinates_of(w).unwrap();
        let rebuilt = h.witness_combination(&coords, w.shift()).unwrap();
        assert!(rebuilt.equal_as_morphisms(w).unwrap());
    }
}
