//! Trace of a degree-zero endomorphism through a chain lift over the
//! minimal free resolution: the alternating sum of the constant parts of
//! the lifted diagonal. Minimality of the resolution makes the value
//! independent of the chosen lift, and it agrees with the trace of the
//! induced map over the fraction field.

use crate::error::{Error, Result};
use crate::fpmodules::module::FPModule;
use crate::fpmodules::morphism::{minimalize, ModuleMorphism};
use crate::fpmodules::resolution::free_resolution;
use crate::groebner::GroebnerBasis;
use crate::polyring::poly::Polynomial;

/// Trace of an endomorphism. Nonzero-shift endomorphisms have zero trace
/// for degree reasons and report zero directly.
pub fn endomorphism_trace(e: &FPModule, phi: &ModuleMorphism) -> Result<u64> {
    if *phi.source() != *e || *phi.target() != *e {
        return Err(Error::AmbientMismatch);
    }
    if phi.shift() != 0 {
        return Ok(0);
    }
    let field = *e.ring().field();
    let min = minimalize(e)?;
    let phi_min = min.to_min.compose(&phi.compose(&min.from_min)?)?;
    let res = free_resolution(&min.module, e.ring().nvars() + 1)?;
    if !res.complete {
        return Err(Error::Internal("incomplete resolution in trace".into()));
    }

    let mut trace = 0u64;
    let mut sign_positive = true;
    let mut current = phi_min.matrix().to_vec();
    let diag = |m: &[Vec<Polynomial>]| -> u64 {
        let mut t = 0u64;
        for (i, row) in m.iter().enumerate() {
            t = field.add(t, row[i].constant_coeff());
        }
        t
    };
    trace = field.add(trace, diag(&current));
    for d in &res.maps {
        // solve d * next = current * d column by column
        let cols = d.columns();
        let gb = GroebnerBasis::compute(d.target().ambient(), cols.clone())?;
        let rank_next = d.source().ambient().rank();
        let mut next = vec![vec![Polynomial::zero(e.ring()); rank_next]; rank_next];
        for (j, col) in cols.iter().enumerate() {
            // image of the j-th generator of F_i under phi_{i-1} o d_i
            let mut image = crate::groebner::VectorPoly::zero(d.target().ambient().rank());
            for (row_idx, p) in col.entries() {
                for (i, row) in current.iter().enumerate() {
                    if !row[row_idx].is_zero() {
                        image.add_entry(i, &row[row_idx].mul(p)?);
                    }
                }
            }
            let Some(coeffs) = gb.coefficients_over_generators(&image)? else {
                return Err(Error::Internal(
                    "chain lift failed over the resolution".into(),
                ));
            };
            for (u, c) in coeffs.into_iter().enumerate() {
                next[u][j] = c;
            }
        }
        sign_positive = !sign_positive;
        let t = diag(&next);
        trace = if sign_positive {
            field.add(trace, t)
        } else {
            field.sub(trace, t)
        };
        current = next;
    }
    Ok(trace)
}
