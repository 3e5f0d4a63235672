//! Groebner engine for submodules of graded free modules: Buchberger
//! completion, normal forms, membership with certificates, and Schreyer
//! syzygies. Inputs must be homogeneous; the graded setting is what makes
//! minimal presentations and Nakayama-style arguments exact downstream.

pub mod engine;
pub mod vecpoly;

pub use engine::{
    syzygy_ambient, syzygy_basis, GroebnerBasis, IncrementalBasis, MembershipCertificate,
};
pub use vecpoly::{cmp_mod_term, FreeModule, ModHomogeneity, ModTerm, VectorPoly};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly::{parse_polynomial, standard_ring, Polynomial, Ring};

    fn ideal_gens(ring: &Ring, texts: &[&str]) -> (FreeModule, Vec<VectorPoly>) {
        let ambient = FreeModule::new(ring, vec![0]);
        let gens = texts
            .iter()
            .map(|t| VectorPoly::from_entry(1, 0, parse_polynomial(t, ring).unwrap()))
            .collect();
        (ambient, gens)
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        // grade y with... instead use the homogeneous x^2 - y*w in 3 vars
        let r = standard_ring(32003, &["x", "y", "w"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["x^2 - y*w"]);
        let gb = GroebnerBasis::compute(&ambient, gens).unwrap();
        assert_eq!(gb.elements().len(), 1);
    }

    #[test]
    fn coprime_monomial_ideal() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["x", "y"]);
        let gb = GroebnerBasis::compute(&ambient, gens).unwrap();
        assert_eq!(gb.elements().len(), 2);
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["x^2 - y"]);
        assert!(GroebnerBasis::compute(&ambient, gens).is_err());
    }

    #[test]
    fn normal_form_contracts() {
        let r = standard_ring(32003, &["x", "y", "w"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["x^2 - y*w"]);
        let gb = GroebnerBasis::compute(&ambient, gens.clone()).unwrap();
        // NF(0) = 0 and NF(g) = 0 for basis members
        assert!(gb.normal_form(&VectorPoly::zero(1)).unwrap().is_zero());
        assert!(gb.normal_form(&gens[0]).unwrap().is_zero());
        // x^2*y reduces to y^2*w
        let v = VectorPoly::from_entry(1, 0, parse_polynomial("x^2*y", &r).unwrap());
        let nf = gb.normal_form(&v).unwrap();
        assert_eq!(
            nf.entry(0).unwrap(),
            &parse_polynomial("y^2*w", &r).unwrap()
        );
        // idempotence
        assert_eq!(gb.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn membership_certificate_identity() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["x", "y"]);
        let gb = GroebnerBasis::compute(&ambient, gens.clone()).unwrap();
        // v = x*g1 + y*g2 = x^2 + y^2
        let v = VectorPoly::from_entry(1, 0, parse_polynomial("x^2 + y^2", &r).unwrap());
        let cert = gb.membership(&v).unwrap();
        assert!(cert.remainder.is_zero());
        let mut acc = VectorPoly::zero(1);
        for (k, c) in cert.coefficients.iter().enumerate() {
            acc = acc.add(&gb.elements()[k].mul_poly(c).unwrap());
        }
        acc = acc.add(&cert.remainder);
        assert_eq!(acc, v);
        // 1 is not in the proper graded ideal (x, y)
        let one = VectorPoly::from_entry(1, 0, Polynomial::one(&r));
        let cert = gb.membership(&one).unwrap();
        assert_eq!(cert.remainder, one);
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["x", "y"]);
        let syz = syzygy_basis(&ambient, &gens).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        // s = (y, -x) up to sign
        let sy = s.entry(0).unwrap();
        let sx = s.entry(1).unwrap();
        let y = parse_polynomial("y", &r).unwrap();
        let x = parse_polynomial("x", &r).unwrap();
        assert!(
            (sy == &y && sx == &x.neg()) || (sy == &y.neg() && sx == &x),
            "unexpected syzygy {s:?}"
        );
    }

    #[test]
    fn no_syzygy_for_a_nonzerodivisor() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["x"]);
        let syz = syzygy_basis(&ambient, &gens).unwrap();
        assert!(syz.is_empty());
    }

    #[test]
    fn koszul_syzygies_of_three_variables() {
        let r = standard_ring(32003, &["x", "y", "z"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["x", "y", "z"]);
        let syz = syzygy_basis(&ambient, &gens).unwrap();
        // All returned vectors annihilate the generators (checked inside in
        // debug builds); the span must contain the three Koszul relations.
        for s in &syz {
            let mut acc = VectorPoly::zero(1);
            for (j, c) in s.entries() {
                acc = acc.add(&gens[j].mul_poly(c).unwrap());
            }
            assert!(acc.is_zero());
        }
        let syz_amb = syzygy_ambient(&ambient, &gens);
        let gb = GroebnerBasis::compute(&syz_amb, syz).unwrap();
        let koszul = [
            VectorPoly::from_entries(
                3,
                vec![
                    (0, parse_polynomial("y", &r).unwrap()),
                    (1, parse_polynomial("-x", &r).unwrap()),
                ],
            ),
            VectorPoly::from_entries(
                3,
                vec![
                    (0, parse_polynomial("z", &r).unwrap()),
                    (2, parse_polynomial("-x", &r).unwrap()),
                ],
            ),
            VectorPoly::from_entries(
                3,
                vec![
                    (1, parse_polynomial("z", &r).unwrap()),
                    (2, parse_polynomial("-y", &r).unwrap()),
                ],
            ),
        ];
        for k in &koszul {
            assert!(gb.contains(k).unwrap(), "missing Koszul relation {k:?}");
        }
    }

    #[test]
    fn deterministic_output() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["x^2 + x*y", "x*y + y^2"]);
        let a = GroebnerBasis::compute(&ambient, gens.clone()).unwrap();
        let b = GroebnerBasis::compute(&ambient, gens).unwrap();
        assert_eq!(a.elements(), b.elements());
    }
}
