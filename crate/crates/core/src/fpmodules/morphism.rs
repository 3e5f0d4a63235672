//! Graded morphisms between finitely presented modules, checked for
//! well-definedness at construction, with kernel, image and cokernel
//! presentations.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fpmodules::module::{minimal_presentation, FPModule, MinimalPresentation};
use crate::groebner::{syzygy_basis, FreeModule, GroebnerBasis, VectorPoly};
use crate::polyring::poly::{same_ring, Polynomial, Ring};

/// A morphism of graded modules: `matrix[i][j]` is the coefficient of
/// target generator `i` in the image of source generator `j`. A morphism
/// of shift `s` sends elements of degree `d` to elements of degree `d+s`.
#[derive(Debug, Clone)]
pub struct ModuleMorphism {
    source: Arc<FPModule>,
    target: Arc<FPModule>,
    matrix: Vec<Vec<Polynomial>>,
    shift: i64,
}

impl ModuleMorphism {
    /// Build and certify a morphism: entries must be homogeneous of the
    /// degree dictated by the generator degrees and the shift, and the
    /// image of every source relation must lie in the target relations.
    pub fn new(
        source: &FPModule,
        target: &FPModule,
        matrix: Vec<Vec<Polynomial>>,
        shift: i64,
    ) -> Result<ModuleMorphism> {
        if !same_ring(source.ring(), target.ring()) {
            return Err(Error::RingMismatch);
        }
        let rs = source.ambient().rank();
        let rt = target.ambient().rank();
        if matrix.len() != rt || matrix.iter().any(|row| row.len() != rs) {
            return Err(Error::IllDefinedMorphism(format!(
                "matrix must be {rt} x {rs}"
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let want = source.ambient().degree(j) + shift - target.ambient().degree(i);
                match entry.homogeneity() {
                    crate::polyring::poly::Homogeneity::Homogeneous(d) if d as i64 == want => {}
                    _ => {
                        return Err(Error::IllDefinedMorphism(format!(
                            "entry ({i}, {j}) must be homogeneous of degree {want}"
                        )))
                    }
                }
            }
        }
        let morphism = ModuleMorphism {
            source: Arc::new(source.clone()),
            target: Arc::new(target.clone()),
            matrix,
            shift,
        };
        for (k, col) in source.relations().iter().enumerate() {
            let image = morphism.apply_ambient(col);
            if !target.gb().contains(&image)? {
                return Err(Error::IllDefinedMorphism(format!(
                    "image of source relation {k} does not lie in the target relations"
                )));
            }
        }
        Ok(morphism)
    }

    pub fn identity(module: &FPModule) -> ModuleMorphism {
        let ring = module.ring();
        let r = module.ambient().rank();
        let matrix = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            Polynomial::one(ring)
                        } else {
                            Polynomial::zero(ring)
                        }
                    })
                    .collect()
            })
            .collect();
        ModuleMorphism {
            source: Arc::new(module.clone()),
            target: Arc::new(module.clone()),
            matrix,
            shift: 0,
        }
    }

    pub fn zero(source: &FPModule, target: &FPModule, shift: i64) -> ModuleMorphism {
        let ring = source.ring();
        let matrix =
            vec![vec![Polynomial::zero(ring); source.ambient().rank()]; target.ambient().rank()];
        ModuleMorphism {
            source: Arc::new(source.clone()),
            target: Arc::new(target.clone()),
            matrix,
            shift,
        }
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<Polynomial>] {
        &self.matrix
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }

    /// Image of source generator `j` in the target ambient.
    pub fn column(&self, j: usize) -> VectorPoly {
        VectorPoly::from_entries(
            self.target.ambient().rank(),
            self.matrix
                .iter()
                .enumerate()
                .map(|(i, row)| (i, row[j].clone()))
                .collect(),
        )
    }

    pub fn columns(&self) -> Vec<VectorPoly> {
        (0..self.source.ambient().rank())
            .map(|j| self.column(j))
            .collect()
    }

    /// Apply the matrix to an ambient element of the source.
    pub fn apply_ambient(&self, v: &VectorPoly) -> VectorPoly {
        let mut out = VectorPoly::zero(self.target.ambient().rank());
        for (j, p) in v.entries() {
            for (i, row) in self.matrix.iter().enumerate() {
                if !row[j].is_zero() {
                    out.add_entry(i, &row[j].mul(p).expect("same ring"));
                }
            }
        }
        out
    }

    /// Composition `self o inner` (apply `inner` first).
    pub fn compose(&self, inner: &ModuleMorphism) -> Result<ModuleMorphism> {
        if *self.source != *inner.target {
            return Err(Error::AmbientMismatch);
        }
        let ring = self.ring();
        let rows = self.target.ambient().rank();
        let mid = self.source.ambient().rank();
        let cols = inner.source.ambient().rank();
        let mut matrix = vec![vec![Polynomial::zero(ring); cols]; rows];
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = Polynomial::zero(ring);
                for l in 0..mid {
                    if !self.matrix[i][l].is_zero() && !inner.matrix[l][j].is_zero() {
                        acc = acc.add(&self.matrix[i][l].mul(&inner.matrix[l][j])?);
                    }
                }
                matrix[i][j] = acc;
            }
        }
        Ok(ModuleMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix,
            shift: self.shift + inner.shift,
        })
    }

    pub fn add(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        if *self.source != *other.source || *self.target != *other.target {
            return Err(Error::AmbientMismatch);
        }
        if self.shift != other.shift {
            return Err(Error::IllDefinedMorphism(
                "cannot add morphisms of different shifts".into(),
            ));
        }
        let matrix = self
            .matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(r1, r2)| r1.iter().zip(r2.iter()).map(|(a, b)| a.add(b)).collect())
            .collect();
        Ok(ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix,
            shift: self.shift,
        })
    }

    pub fn scale(&self, c: u64) -> ModuleMorphism {
        ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(|p| p.scale(c)).collect())
                .collect(),
            shift: self.shift,
        }
    }

    /// Multiply by a homogeneous polynomial, shifting accordingly.
    pub fn scale_poly(&self, c: &Polynomial) -> Result<ModuleMorphism> {
        let d = match c.homogeneity() {
            crate::polyring::poly::Homogeneity::Homogeneous(d) => d as i64,
            crate::polyring::poly::Homogeneity::ZeroEveryDegree => 0,
            crate::polyring::poly::Homogeneity::Inhomogeneous => {
                return Err(Error::Inhomogeneous("morphism scale factor".into()))
            }
        };
        let matrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|p| p.mul(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix,
            shift: self.shift + d,
        })
    }

    /// True if this morphism is zero as a map of modules.
    pub fn is_zero_morphism(&self) -> Result<bool> {
        for j in 0..self.source.ambient().rank() {
            if !self.target.gb().contains(&self.column(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as module maps: same source/target, all columns congruent
    /// modulo target relations.
    pub fn equal_as_morphisms(&self, other: &ModuleMorphism) -> Result<bool> {
        if *self.source != *other.source || *self.target != *other.target {
            return Ok(false);
        }
        for j in 0..self.source.ambient().rank() {
            let diff = self.column(j).sub(&other.column(j));
            if !self.target.gb().contains(&diff)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Syzygies of the morphism columns modulo the target relations, projected
/// onto the column block: exactly the relations among the images of the
/// source generators inside the target module, equivalently the elements
/// of the source ambient mapping into the target relations.
fn preimage_syzygies(phi: &ModuleMorphism) -> Result<Vec<VectorPoly>> {
    let cols = phi.columns();
    let ncols = cols.len();
    let mut gens = cols;
    gens.extend_from_slice(phi.target().relations());
    let syz = syzygy_basis(phi.target().ambient(), &gens)?;
    let mut out = Vec::new();
    for s in syz {
        let first = VectorPoly::from_entries(
            ncols,
            s.entries()
                .filter(|(p, _)| *p < ncols)
                .map(|(p, q)| (p, q.clone()))
                .collect(),
        );
        if !first.is_zero() {
            out.push(first);
        }
    }
    Ok(out)
}

/// A submodule presented with its inclusion morphism.
#[derive(Debug, Clone)]
pub struct SubmoduleResult {
    pub module: FPModule,
    pub inclusion: ModuleMorphism,
}

/// Kernel of a morphism, as a minimally presented module with the
/// inclusion into the source.
pub fn kernel_of(phi: &ModuleMorphism) -> Result<SubmoduleResult> {
    let source = phi.source();
    let ring = phi.ring();
    let rs = source.ambient().rank();
    // generators of {v : phi(v) lies in the target relations}
    let pre = preimage_syzygies(phi)?;
    let gens: Vec<VectorPoly> = pre
        .iter()
        .map(|s| VectorPoly::from_entries(rs, s.entries().map(|(p, q)| (p, q.clone())).collect()))
        .collect();
    submodule_from_generators(source, gens, ring, phi.shift())
}

/// Present the submodule of `parent` generated by ambient vectors `gens`
/// (each homogeneous). `shift_hint` only adjusts degrees when generators
/// come from a shifted map; pass 0 for plain submodules.
fn submodule_from_generators(
    parent: &FPModule,
    gens: Vec<VectorPoly>,
    ring: &Ring,
    _shift_hint: i64,
) -> Result<SubmoduleResult> {
    // monic-normalize so the presentation is canonical
    let gens: Vec<VectorPoly> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let lc = g.leading_term().expect("nonzero").coeff;
            g.scale(ring.field().inv(lc))
        })
        .collect();
    let degrees: Vec<i64> = gens
        .iter()
        .map(|g| g.degree_in(parent.ambient()))
        .collect::<Result<Vec<_>>>()?;
    let ambient = FreeModule::new(ring, degrees);
    // relations: syzygies of the generators modulo the parent relations
    let mut all = gens.clone();
    all.extend_from_slice(parent.relations());
    let syz = syzygy_basis(parent.ambient(), &all)?;
    let mut rel_cols = Vec::new();
    for s in syz {
        let first = VectorPoly::from_entries(
            gens.len(),
            s.entries()
                .filter(|(p, _)| *p < gens.len())
                .map(|(p, q)| (p, q.clone()))
                .collect(),
        );
        if !first.is_zero() {
            rel_cols.push(first);
        }
    }
    let presented = FPModule::new(ambient, rel_cols)?;
    let min = minimal_presentation(&presented)?;
    let kept_gens: Vec<VectorPoly> = min.kept.iter().map(|&i| gens[i].clone()).collect();
    let module = min.module;
    // inclusion matrix: kept generators as columns in the parent ambient
    let rt = parent.ambient().rank();
    let mut matrix = vec![vec![Polynomial::zero(ring); kept_gens.len()]; rt];
    for (j, g) in kept_gens.iter().enumerate() {
        for (i, p) in g.entries() {
            matrix[i][j] = p.clone();
        }
    }
    let inclusion = ModuleMorphism::new(&module, parent, matrix, 0)?;
    Ok(SubmoduleResult { module, inclusion })
}

/// Image of a morphism: the submodule of the target generated by the
/// columns, minimally presented, with its inclusion.
pub fn image_of(phi: &ModuleMorphism) -> Result<SubmoduleResult> {
    let ring = phi.ring();
    submodule_from_generators(phi.target(), phi.columns(), ring, phi.shift())
}

/// Cokernel: the target with the morphism columns adjoined as relations.
/// Returns the module and the projection from the target.
pub fn cokernel_of(phi: &ModuleMorphism) -> Result<(FPModule, ModuleMorphism)> {
    let target = phi.target();
    let mut relations = target.relations().to_vec();
    relations.extend(phi.columns().into_iter().filter(|c| !c.is_zero()));
    let module = FPModule::new(target.ambient().clone(), relations)?;
    let ring = phi.ring();
    let rt = target.ambient().rank();
    let matrix = (0..rt)
        .map(|i| {
            (0..rt)
                .map(|j| {
                    if i == j {
                        Polynomial::one(ring)
                    } else {
                        Polynomial::zero(ring)
                    }
                })
                .collect()
        })
        .collect();
    let projection = ModuleMorphism::new(target, &module, matrix, 0)?;
    Ok((module, projection))
}

/// Factor `phi : A -> B` through an inclusion `iota : K -> B` whose image
/// contains the image of `phi`, producing `psi : A -> K` with
/// `iota o psi = phi`. Uses one Groebner basis of the inclusion columns
/// together with the target relations.
pub fn lift_through(phi: &ModuleMorphism, iota: &ModuleMorphism) -> Result<ModuleMorphism> {
    if *phi.target() != *iota.target() {
        return Err(Error::AmbientMismatch);
    }
    let ring = phi.ring();
    let k_gens = iota.columns();
    let nk = k_gens.len();
    let mut gens = k_gens;
    gens.extend_from_slice(phi.target().relations());
    let gb = GroebnerBasis::compute(phi.target().ambient(), gens)?;
    let mut matrix = vec![vec![Polynomial::zero(ring); phi.source().ambient().rank()]; nk];
    for j in 0..phi.source().ambient().rank() {
        let col = phi.column(j);
        let Some(coeffs) = gb.coefficients_over_generators(&col)? else {
            return Err(Error::Internal(
                "lifting failure: image does not factor through the submodule".into(),
            ));
        };
        for (u, item) in coeffs.iter().take(nk).enumerate() {
            matrix[u][j] = item.clone();
        }
    }
    ModuleMorphism::new(
        phi.source(),
        iota.source(),
        matrix,
        phi.shift() - iota.shift(),
    )
}

/// Construct the change-of-presentation morphisms from a minimalization.
pub struct Minimalization {
    pub module: FPModule,
    pub kept: Vec<usize>,
    pub to_min: ModuleMorphism,
    pub from_min: ModuleMorphism,
}

pub fn minimalize(module: &FPModule) -> Result<Minimalization> {
    let MinimalPresentation {
        module: min,
        kept,
        to_matrix,
        from_matrix,
    } = minimal_presentation(module)?;
    let to_min = ModuleMorphism::new(module, &min, to_matrix, 0)?;
    let from_min = ModuleMorphism::new(&min, module, from_matrix, 0)?;
    Ok(Minimalization {
        module: min,
        kept,
        to_min,
        from_min,
    })
}

/// Minimal number of generators.
pub fn nu(module: &FPModule) -> Result<usize> {
    if module.is_minimal() {
        return Ok(module.generator_count());
    }
    Ok(minimal_presentation(module)?.module.generator_count())
}
