//! The endomorphism module `End(E) = Hom(E, E)` with its identity
//! located over the generators, and the radical subideals: endomorphisms
//! landing in `mE`, and endomorphisms factoring through the dual
//! evaluation.

use crate::error::Result;
use crate::fpmodules::hom::{hom, natural_hom_map, HomModule};
use crate::fpmodules::module::FPModule;
use crate::fpmodules::morphism::{image_of, kernel_of, ModuleMorphism, SubmoduleResult};
use crate::groebner::VectorPoly;
use crate::polyring::poly::Polynomial;

/// `End(E)` together with the coordinates of the identity over the Hom
/// generators.
pub struct EndAlgebra {
    pub module: FPModule,
    pub hom: HomModule,
    pub identity_coords: Vec<Polynomial>,
}

pub fn end_algebra(e: &FPModule) -> Result<EndAlgebra> {
    let h = hom(e, e)?;
    let id = ModuleMorphism::identity(e);
    let identity_coords = h.coordinates_of(&id)?;
    Ok(EndAlgebra {
        module: h.module().clone(),
        hom: h,
        identity_coords,
    })
}

impl EndAlgebra {
    /// Check that the located identity composes as a two-sided unit on
    /// every witness, up to relation membership.
    pub fn verify_unit_law(&self) -> Result<bool> {
        let id = self.hom.witness_combination(&self.identity_coords, 0)?;
        for w in self.hom.witnesses() {
            let left = id.compose(w)?;
            let right = w.compose(&id)?;
            if !left.equal_as_morphisms(w)? || !right.equal_as_morphisms(w)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Materialize a coordinate vector over the End generators as an
    /// endomorphism.
    pub fn endomorphism_from_coords(
        &self,
        coords: &[Polynomial],
        shift: i64,
    ) -> Result<ModuleMorphism> {
        self.hom.witness_combination(coords, shift)
    }
}

/// The quotient `E/mE` of a module whose relations lie in `m * F0`:
/// presented on the same generators with all variable multiples as
/// relations.
pub fn quotient_mod_irrelevant(e: &FPModule) -> Result<FPModule> {
    let ring = e.ring().clone();
    let r = e.ambient().rank();
    let mut relations = Vec::with_capacity(r * ring.nvars());
    for i in 0..r {
        for v in 0..ring.nvars() {
            relations.push(VectorPoly::from_entry(r, i, Polynomial::variable(&ring, v)));
        }
    }
    FPModule::new(e.ambient().clone(), relations)
}

/// `J0 = Hom(E, mE)`: the kernel of the map `End(E) -> Hom(E, E/mE)`
/// induced by the quotient, returned with its inclusion into `End(E)`.
/// Requires a presentation with relations inside `m * F0`.
pub fn j0(e: &FPModule, end: &EndAlgebra) -> Result<SubmoduleResult> {
    if !e.is_minimal() {
        return Err(crate::error::Error::NotMinimal(
            "J0 needs relations inside m * F0".into(),
        ));
    }
    let ring = e.ring().clone();
    let ebar = quotient_mod_irrelevant(e)?;
    let r = e.ambient().rank();
    let identity = (0..r)
        .map(|i| {
            (0..r)
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
    let q = ModuleMorphism::new(e, &ebar, identity, 0)?;
    let hom_bar = hom(e, &ebar)?;
    let nend = end.module.ambient().rank();
    let mut matrix = vec![vec![Polynomial::zero(&ring); nend]; hom_bar.module().ambient().rank()];
    for (u, w) in end.hom.witnesses().iter().enumerate() {
        let composed = q.compose(w)?;
        let coords = hom_bar.coordinates_of(&composed)?;
        for (t, c) in coords.into_iter().enumerate() {
            matrix[t][u] = c;
        }
    }
    let post = ModuleMorphism::new(&end.module, hom_bar.module(), matrix, 0)?;
    kernel_of(&post)
}

/// `J1 = image(E* (x) E -> End(E))` under the natural evaluation map,
/// returned with its inclusion into `End(E)`.
pub fn j1(e: &FPModule) -> Result<SubmoduleResult> {
    let nat = natural_hom_map(e, e)?;
    image_of(&nat.map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpmodules::module::hf_equal;
    use crate::fpmodules::morphism::nu;
    use crate::polyring::poly::{parse_polynomial, standard_ring};

    #[test]
    fn end_of_free_rank_two_is_full_matrix_module() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let f = FPModule::free(&r, vec![0, 0]);
        let end = end_algebra(&f).unwrap();
        assert_eq!(end.module.generator_count(), 4);
        assert!(end.module.relations().is_empty());
        assert!(end.verify_unit_law().unwrap());
    }

    #[test]
    fn end_of_cyclic_torsion_module() {
        let r = standard_ring(32003, &["x"]).unwrap();
        let rx = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let end = end_algebra(&rx).unwrap();
        assert_eq!(nu(&end.module).unwrap(), 1);
        assert!(hf_equal(&end.module, &rx, -2, 4));
        assert!(end.verify_unit_law().unwrap());
    }

    #[test]
    fn j0_of_free_module_is_irrelevant_multiple() {
        // for E free, J0 = m * End(E): Hilbert function matches four
        // copies of the maximal ideal
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let f = FPModule::free(&r, vec![0, 0]);
        let end = end_algebra(&f).unwrap();
        let sub = j0(&f, &end).unwrap();
        let hf = sub.module.hilbert_function(0, 3);
        // m has dims (0, 2, 3, 4) over two variables; four copies
        assert_eq!(hf.dims, vec![0, 8, 12, 16]);
        // J1 for a free module is everything
        let sub1 = j1(&f).unwrap();
        assert!(hf_equal(&sub1.module, &end.module, 0, 4));
    }

    #[test]
    fn j0_of_cyclic_torsion_has_codimension_one() {
        let r = standard_ring(32003, &["x"]).unwrap();
        let rx = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let end = end_algebra(&rx).unwrap();
        let sub = j0(&rx, &end).unwrap();
        // dim_k(End / J0) = 1: End = R/(x) has total dimension 1, J0 = 0
        let h_end = end.module.hilbert_function(-2, 4).total();
        let h_j0 = sub.module.hilbert_function(-2, 4).total();
        assert_eq!(h_end - h_j0, 1);
    }

    #[test]
    fn j1_generators_inside_j0_without_free_summand() {
        // E = maximal ideal (x, y): no free summand, so J1 <= J0
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let ambient = crate::groebner::FreeModule::new(&r, vec![1, 1]);
        let rel = VectorPoly::from_entries(
            2,
            vec![
                (0, parse_polynomial("y", &r).unwrap()),
                (1, parse_polynomial("-x", &r).unwrap()),
            ],
        );
        let ideal = FPModule::new(ambient, vec![rel]).unwrap();
        let end = end_algebra(&ideal).unwrap();
        let sub0 = j0(&ideal, &end).unwrap();
        let sub1 = j1(&ideal).unwrap();
        // every J1 generator lies in the submodule J0 of End(E)
        let mut gens0 = sub0.inclusion.columns();
        gens0.extend_from_slice(end.module.relations());
        let gb = crate::groebner::GroebnerBasis::compute(end.module.ambient(), gens0).unwrap();
        for col in sub1.inclusion.columns() {
            assert!(gb.contains(&col).unwrap());
        }
    }
}
