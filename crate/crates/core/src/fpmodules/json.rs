//! JSON schemas for modules and morphisms. Polynomials travel as their
//! canonical text form; the ring is spelled out once per module.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpmodules::module::FPModule;
use crate::fpmodules::morphism::ModuleMorphism;
use crate::groebner::{FreeModule, VectorPoly};
use crate::polyring::field::PrimeField;
use crate::polyring::poly::{parse_polynomial, Polynomial, Ring, RingDescriptor};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RingJson {
    pub prime: u64,
    pub vars: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModuleJson {
    pub ring: RingJson,
    pub generator_degrees: Vec<i64>,
    /// column-major: one inner list per relation, one entry per generator
    pub relations: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: ModuleJson,
    pub target: ModuleJson,
    /// row-major: entry `[i][j]` is the coefficient of target generator
    /// `i` in the image of source generator `j`
    pub matrix: Vec<Vec<String>>,
    pub shift: i64,
}

pub fn ring_to_json(ring: &Ring) -> RingJson {
    RingJson {
        prime: ring.field().p(),
        vars: ring.vars().to_vec(),
    }
}

pub fn ring_from_json(j: &RingJson) -> Result<Ring> {
    RingDescriptor::new(PrimeField::new(j.prime)?, j.vars.clone())
}

pub fn module_to_json(e: &FPModule) -> ModuleJson {
    let r = e.ambient().rank();
    let relations = e
        .relations()
        .iter()
        .map(|col| {
            (0..r)
                .map(|i| {
                    col.entry(i)
                        .map(|p| p.to_string())
                        .unwrap_or_else(|| "0".to_string())
                })
                .collect()
        })
        .collect();
    ModuleJson {
        ring: ring_to_json(e.ring()),
        generator_degrees: e.ambient().degrees().to_vec(),
        relations,
    }
}

pub fn module_from_json(j: &ModuleJson) -> Result<FPModule> {
    let ring = ring_from_json(&j.ring)?;
    let rank = j.generator_degrees.len();
    let ambient = FreeModule::new(&ring, j.generator_degrees.clone());
    let mut relations = Vec::with_capacity(j.relations.len());
    for (k, col) in j.relations.iter().enumerate() {
        if col.len() != rank {
            return Err(Error::Parse {
                pos: 0,
                msg: format!(
                    "relation column {k} has {} entries, expected {rank} (field `relations`)",
                    col.len()
                ),
            });
        }
        let mut entries = Vec::new();
        for (i, text) in col.iter().enumerate() {
            let p = parse_polynomial(text, &ring)?;
            if !p.is_zero() {
                entries.push((i, p));
            }
        }
        relations.push(VectorPoly::from_entries(rank, entries));
    }
    FPModule::new(ambient, relations)
}

pub fn morphism_to_json(phi: &ModuleMorphism) -> MorphismJson {
    MorphismJson {
        source: module_to_json(phi.source()),
        target: module_to_json(phi.target()),
        matrix: phi
            .matrix()
            .iter()
            .map(|row| row.iter().map(Polynomial::to_string).collect())
            .collect(),
        shift: phi.shift(),
    }
}

pub fn morphism_from_json(j: &MorphismJson) -> Result<ModuleMorphism> {
    let source = module_from_json(&j.source)?;
    let target = module_from_json(&j.target)?;
    let ring = source.ring().clone();
    let matrix = j
        .matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|text| parse_polynomial(text, &ring))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleMorphism::new(&source, &target, matrix, j.shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly::standard_ring;

    #[test]
    fn module_roundtrip() {
        let r = standard_ring(32003, &["x", "y"]).unwrap();
        let m = FPModule::cyclic(
            &r,
            &[
                parse_polynomial("x^2 - y^2", &r).unwrap(),
                parse_polynomial("x*y", &r).unwrap(),
            ],
        )
        .unwrap();
        let j = module_to_json(&m);
        let back = module_from_json(&j).unwrap();
        assert_eq!(m, back);
        // serde roundtrip too
        let text = serde_json::to_string(&j).unwrap();
        let parsed: ModuleJson = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, j);
    }

    #[test]
    fn bad_column_length_reports_field() {
        let j = ModuleJson {
            ring: RingJson {
                prime: 32003,
                vars: vec!["x".into()],
            },
            generator_degrees: vec![0, 0],
            relations: vec![vec!["x".into()]],
        };
        let err = module_from_json(&j).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("relations"), "{msg}");
    }

    #[test]
    fn morphism_roundtrip() {
        let r = standard_ring(32003, &["x"]).unwrap();
        let rx = FPModule::cyclic(&r, &[parse_polynomial("x", &r).unwrap()]).unwrap();
        let phi = ModuleMorphism::identity(&rx);
        let j = morphism_to_json(&phi);
        let back = morphism_from_json(&j).unwrap();
        assert!(back.equal_as_morphisms(&phi).unwrap());
        // an ill-defined matrix is rejected on the way in
        let bad = MorphismJson {
            source: module_to_json(&rx),
            target: module_to_json(&FPModule::ring_module(&r)),
            matrix: vec![vec!["1".into()]],
            shift: 0,
        };
        assert!(morphism_from_json(&bad).is_err());
    }
}
