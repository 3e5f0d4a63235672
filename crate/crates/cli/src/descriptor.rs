//! Construction descriptors: a small JSON vocabulary for building the
//! fixture modules, shared by the corpus runner.

use serde::{Deserialize, Serialize};

use endoring_core::constructions::{
    generic_determinantal, koszul_cycles, one_relation_module, perfect_syzygy,
};
use endoring_core::error::{Error, Result};
use endoring_core::fpmodules::{direct_sum, module_from_json, FPModule, ModuleJson};
use endoring_core::polyring::{parse_polynomial, PrimeField, RingDescriptor};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Descriptor {
    /// Koszul cycle module `Z_cycle` on `n` variables.
    Koszul { n: usize, cycle: usize },
    /// Generic determinantal cokernel of an `m x n` variable matrix.
    Det { n: usize, m: usize },
    /// Module with the single relation column given by `entries`.
    OneRelation {
        vars: Vec<String>,
        entries: Vec<String>,
    },
    /// Free module over the named variables.
    Free {
        vars: Vec<String>,
        degrees: Vec<i64>,
    },
    /// Cyclic quotient `R/(ideal)`.
    Quotient {
        vars: Vec<String>,
        ideal: Vec<String>,
    },
    /// `k`-th syzygy module of a perfect module.
    Syzygy { module: Box<Descriptor>, k: usize },
    /// Direct sum of parts.
    Sum { parts: Vec<Descriptor> },
    /// Inline module JSON.
    Module { module: ModuleJson },
    /// Module JSON loaded from a file path.
    File { path: String },
}

impl Descriptor {
    pub fn build(&self, prime: u64) -> Result<FPModule> {
        let field = PrimeField::new(prime)?;
        match self {
            Descriptor::Koszul { n, cycle } => koszul_cycles(field, *n, *cycle),
            Descriptor::Det { n, m } => Ok(generic_determinantal(field, *n, *m)?.module),
            Descriptor::OneRelation { vars, entries } => {
                let ring = RingDescriptor::new(field, vars.clone())?;
                let polys = entries
                    .iter()
                    .map(|t| parse_polynomial(t, &ring))
                    .collect::<Result<Vec<_>>>()?;
                Ok(one_relation_module(&polys)?.module)
            }
            Descriptor::Free { vars, degrees } => {
                let ring = RingDescriptor::new(field, vars.clone())?;
                Ok(FPModule::free(&ring, degrees.clone()))
            }
            Descriptor::Quotient { vars, ideal } => {
                let ring = RingDescriptor::new(field, vars.clone())?;
                let polys = ideal
                    .iter()
                    .map(|t| parse_polynomial(t, &ring))
                    .collect::<Result<Vec<_>>>()?;
                FPModule::cyclic(&ring, &polys)
            }
            Descriptor::Syzygy { module, k } => {
                let m = module.build(prime)?;
                perfect_syzygy(&m, *k)
            }
            Descriptor::Sum { parts } => {
                let built = parts
                    .iter()
                    .map(|p| p.build(prime))
                    .collect::<Result<Vec<_>>>()?;
                let mut iter = built.into_iter();
                let Some(mut acc) = iter.next() else {
                    return Err(Error::Precondition("empty direct sum".into()));
                };
                for part in iter {
                    acc = direct_sum(&acc, &part)?;
                }
                Ok(acc)
            }
            Descriptor::Module { module } => module_from_json(module),
            Descriptor::File { path } => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                    pos: 0,
                    msg: format!("cannot read module file `{path}`: {e}"),
                })?;
                let json: ModuleJson = serde_json::from_str(&text).map_err(|e| Error::Parse {
                    pos: 0,
                    msg: format!("invalid module JSON in `{path}`: {e}"),
                })?;
                module_from_json(&json)
            }
        }
    }
}
