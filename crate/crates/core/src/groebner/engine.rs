//! Buchberger completion for submodules of graded free modules, with
//! representation tracking so membership certificates and syzygies can be
//! expressed over the original generators.
//!
//! The engine is deterministic: S-pairs are processed by ascending degree
//! and then by insertion order, reducers are tried in insertion order, and
//! the final basis is auto-reduced, monic and canonically sorted. Identical
//! inputs therefore produce bit-identical bases.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::groebner::vecpoly::{cmp_mod_term, FreeModule, ModHomogeneity, ModTerm, VectorPoly};
use crate::polyring::poly::{Polynomial, Ring};

/// A Groebner basis of the submodule generated by `gens`, auto-reduced and
/// monic. `reps[k]` expresses `elements[k]` over the original generators.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ambient: FreeModule,
    gens: Vec<VectorPoly>,
    elements: Vec<VectorPoly>,
    reps: Vec<Vec<Polynomial>>,
}

/// Certificate for a division query: `input = sum coefficients[k] *
/// basis[k] + remainder`, where no term of the remainder is divisible by a
/// basis leading term.
#[derive(Debug, Clone)]
pub struct MembershipCertificate {
    pub coefficients: Vec<Polynomial>,
    pub remainder: VectorPoly,
}

struct Tracked {
    v: VectorPoly,
    rep: Vec<Polynomial>,
}

struct Engine {
    ring: Ring,
    ambient: FreeModule,
    ngens: usize,
    basis: Vec<Tracked>,
    /// basis indices grouped by leading position
    buckets: HashMap<usize, Vec<usize>>,
    /// S-pair queue keyed by (degree of the S-vector, i, j)
    pairs: BTreeSet<(i64, usize, usize)>,
    /// pairs already processed or discarded
    done: HashSet<(usize, usize)>,
}

impl Engine {
    fn new(ambient: &FreeModule, ngens: usize) -> Self {
        Engine {
            ring: ambient.ring().clone(),
            ambient: ambient.clone(),
            ngens,
            basis: Vec::new(),
            buckets: HashMap::new(),
            pairs: BTreeSet::new(),
            done: HashSet::new(),
        }
    }

    fn lt(&self, idx: usize) -> ModTerm {
        self.basis[idx]
            .v
            .leading_term()
            .expect("basis element is nonzero")
    }

    /// Fully reduce `v` against the current basis, skipping the reducer
    /// `exclude` when given. Optionally accumulates the change into a
    /// generator representation and the quotients over basis elements.
    fn reduce(
        &self,
        mut v: VectorPoly,
        mut rep: Option<&mut Vec<Polynomial>>,
        mut quotients: Option<&mut Vec<Polynomial>>,
        exclude: Option<usize>,
    ) -> VectorPoly {
        let mut nf = VectorPoly::zero(v.rank());
        'outer: while let Some(lt) = v.leading_term() {
            if let Some(bucket) = self.buckets.get(&lt.pos) {
                for &k in bucket {
                    if exclude == Some(k) {
                        continue;
                    }
                    let blt = self.lt(k);
                    if let Some(m) = blt.mono.try_div(&lt.mono) {
                        // basis elements are monic
                        let c = lt.coeff;
                        v = v.sub(&self.basis[k].v.mul_term(c, &m));
                        let q = Polynomial::term(&self.ring, c, m);
                        if let Some(r) = rep.as_deref_mut() {
                            for (j, g) in self.basis[k].rep.iter().enumerate() {
                                if !g.is_zero() {
                                    r[j] = r[j].sub(&g.mul(&q).expect("same ring"));
                                }
                            }
                        }
                        if let Some(qs) = quotients.as_deref_mut() {
                            qs[k] = qs[k].add(&q);
                        }
                        continue 'outer;
                    }
                }
            }
            let t = v.pop_leading_term().unwrap();
            nf.push_term(&self.ring, &t);
        }
        nf
    }

    /// Monic-normalize and add a nonzero element without enqueueing pairs.
    fn insert_raw(&mut self, v: VectorPoly, rep: Vec<Polynomial>) -> usize {
        let lt = v.leading_term().expect("insert of zero");
        let inv = self.ring.field().inv(lt.coeff);
        let v = v.scale(inv);
        let rep = rep.iter().map(|p| p.scale(inv)).collect();
        let idx = self.basis.len();
        self.basis.push(Tracked { v, rep });
        self.buckets.entry(lt.pos).or_default().push(idx);
        idx
    }

    /// Add an element and enqueue its S-pairs.
    fn insert(&mut self, v: VectorPoly, rep: Vec<Polynomial>) {
        let idx = self.insert_raw(v, rep);
        let lt = self.lt(idx);
        let bucket = self.buckets.get(&lt.pos).cloned().unwrap_or_default();
        for k in bucket {
            if k == idx {
                continue;
            }
            let klt = self.lt(k);
            let lcm = klt.mono.lcm(&lt.mono);
            let degree = lcm.degree() as i64 + self.ambient.degree(lt.pos);
            self.pairs.insert((degree, k, idx));
        }
    }

    /// Whether the completed pair may be skipped without reduction.
    fn criteria_skip(&self, i: usize, j: usize) -> bool {
        let lti = self.lt(i);
        let ltj = self.lt(j);
        debug_assert_eq!(lti.pos, ltj.pos);
        // Product criterion. Sound for module elements only when both are
        // supported entirely in the shared leading position, where the
        // ring-case argument applies verbatim.
        if lti.mono.coprime(&ltj.mono) {
            let single = |t: &Tracked| t.v.entries().count() == 1;
            if single(&self.basis[i]) && single(&self.basis[j]) {
                return true;
            }
        }
        // Chain criterion.
        let lcm = lti.mono.lcm(&ltj.mono);
        if let Some(bucket) = self.buckets.get(&lti.pos) {
            for &k in bucket {
                if k == i || k == j {
                    continue;
                }
                if self.lt(k).mono.divides(&lcm)
                    && self.done.contains(&key(i, k))
                    && self.done.contains(&key(j, k))
                {
                    return true;
                }
            }
        }
        false
    }

    fn complete(&mut self) {
        while let Some(&(deg, i, j)) = self.pairs.iter().next() {
            self.pairs.remove(&(deg, i, j));
            self.done.insert(key(i, j));
            if self.criteria_skip(i, j) {
                continue;
            }
            let (s, mut rep) = self.s_vector(i, j);
            let nf = self.reduce(s, Some(&mut rep), None, None);
            if !nf.is_zero() {
                self.insert(nf, rep);
            }
        }
    }

    /// S-vector of a (monic) pair with its representation.
    fn s_vector(&self, i: usize, j: usize) -> (VectorPoly, Vec<Polynomial>) {
        let (mi, mj) = self.spair_multipliers(i, j);
        let s = self.basis[i]
            .v
            .mul_term(1, &mi)
            .sub(&self.basis[j].v.mul_term(1, &mj));
        let pi = Polynomial::term(&self.ring, 1, mi);
        let pj = Polynomial::term(&self.ring, 1, mj);
        let rep = (0..self.ngens)
            .map(|g| {
                let a = self.basis[i].rep[g].mul(&pi).expect("same ring");
                let b = self.basis[j].rep[g].mul(&pj).expect("same ring");
                a.sub(&b)
            })
            .collect();
        (s, rep)
    }

    fn spair_multipliers(
        &self,
        i: usize,
        j: usize,
    ) -> (
        crate::polyring::monomial::Monomial,
        crate::polyring::monomial::Monomial,
    ) {
        let lti = self.lt(i);
        let ltj = self.lt(j);
        let lcm = lti.mono.lcm(&ltj.mono);
        (
            lti.mono.try_div(&lcm).unwrap(),
            ltj.mono.try_div(&lcm).unwrap(),
        )
    }
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

impl GroebnerBasis {
    /// Run Buchberger completion on homogeneous generators.
    pub fn compute(ambient: &FreeModule, gens: Vec<VectorPoly>) -> Result<GroebnerBasis> {
        for (j, g) in gens.iter().enumerate() {
            if g.rank() != ambient.rank() {
                return Err(Error::AmbientMismatch);
            }
            if let ModHomogeneity::Inhomogeneous = g.homogeneity(ambient) {
                return Err(Error::Inhomogeneous(format!("generator {j}")));
            }
        }
        let ring = ambient.ring().clone();
        let mut engine = Engine::new(ambient, gens.len());
        for (j, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let mut rep = vec![Polynomial::zero(&ring); gens.len()];
            rep[j] = Polynomial::one(&ring);
            engine.insert(g.clone(), rep);
        }
        engine.complete();

        // Minimize: drop elements whose leading term is divisible by the
        // leading term of another kept element.
        let n = engine.basis.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            let lti = engine.lt(i);
            for j in 0..n {
                if i == j || !keep[j] {
                    continue;
                }
                let ltj = engine.lt(j);
                if ltj.pos == lti.pos
                    && ltj.mono.divides(&lti.mono)
                    && (ltj.mono != lti.mono || j < i)
                {
                    keep[i] = false;
                    break;
                }
            }
        }
        let kept: Vec<usize> = (0..n).filter(|&i| keep[i]).collect();

        // Tail-reduce each kept element against the other kept elements.
        let mut sub = Engine::new(ambient, gens.len());
        for &i in &kept {
            sub.insert_raw(engine.basis[i].v.clone(), engine.basis[i].rep.clone());
        }
        let mut reduced: Vec<Tracked> = Vec::with_capacity(kept.len());
        for idx in 0..kept.len() {
            let mut work = sub.basis[idx].v.clone();
            let mut rep = sub.basis[idx].rep.clone();
            let lt = work.pop_leading_term().unwrap();
            // the lead is irreducible against the others by minimality
            let mut v = sub.reduce(work, Some(&mut rep), None, Some(idx));
            v.push_term(&ring, &lt);
            reduced.push(Tracked { v, rep });
        }

        // Canonical order: leading term descending.
        reduced.sort_by(|a, b| {
            let la = a.v.leading_term().unwrap();
            let lb = b.v.leading_term().unwrap();
            cmp_mod_term(lb.pos, &lb.mono, la.pos, &la.mono)
        });
        let (elements, reps) = reduced.into_iter().map(|t| (t.v, t.rep)).unzip();

        Ok(GroebnerBasis {
            ambient: ambient.clone(),
            gens,
            elements,
            reps,
        })
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn generators(&self) -> &[VectorPoly] {
        &self.gens
    }

    pub fn elements(&self) -> &[VectorPoly] {
        &self.elements
    }

    /// Representation of basis element `k` over the original generators.
    pub fn representation(&self, k: usize) -> &[Polynomial] {
        &self.reps[k]
    }

    pub fn leading_terms(&self) -> Vec<ModTerm> {
        self.elements
            .iter()
            .map(|e| e.leading_term().expect("nonzero"))
            .collect()
    }

    fn reducer_view(&self) -> Engine {
        let mut engine = Engine::new(&self.ambient, self.gens.len());
        for (v, rep) in self.elements.iter().zip(self.reps.iter()) {
            engine.insert_raw(v.clone(), rep.clone());
        }
        engine
    }

    /// Fully reduced normal form.
    pub fn normal_form(&self, v: &VectorPoly) -> Result<VectorPoly> {
        if v.rank() != self.ambient.rank() {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.reducer_view().reduce(v.clone(), None, None, None))
    }

    pub fn contains(&self, v: &VectorPoly) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Division with remainder over the basis elements.
    pub fn membership(&self, v: &VectorPoly) -> Result<MembershipCertificate> {
        if v.rank() != self.ambient.rank() {
            return Err(Error::AmbientMismatch);
        }
        let ring = self.ambient.ring();
        let mut quotients = vec![Polynomial::zero(ring); self.elements.len()];
        let remainder = self
            .reducer_view()
            .reduce(v.clone(), None, Some(&mut quotients), None);
        Ok(MembershipCertificate {
            coefficients: quotients,
            remainder,
        })
    }

    /// If `v` lies in the submodule, expresses it over the original
    /// generators.
    pub fn coefficients_over_generators(&self, v: &VectorPoly) -> Result<Option<Vec<Polynomial>>> {
        let cert = self.membership(v)?;
        if !cert.remainder.is_zero() {
            return Ok(None);
        }
        let ring = self.ambient.ring();
        let mut out = vec![Polynomial::zero(ring); self.gens.len()];
        for (k, q) in cert.coefficients.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (j, r) in self.reps[k].iter().enumerate() {
                if !r.is_zero() {
                    out[j] = out[j].add(&q.mul(r)?);
                }
            }
        }
        Ok(Some(out))
    }
}

/// Schreyer syzygies: generators of the module of relations among `gens`,
/// as vectors in the free module with one slot per generator. Every
/// returned vector `s` satisfies `sum s[j] * gens[j] = 0`, and together
/// they generate the full relation module.
pub fn syzygy_basis(ambient: &FreeModule, gens: &[VectorPoly]) -> Result<Vec<VectorPoly>> {
    let ring = ambient.ring().clone();
    let gb = GroebnerBasis::compute(ambient, gens.to_vec())?;
    let ngens = gens.len();
    let nelems = gb.elements.len();
    let engine = gb.reducer_view();

    // Express each original generator over the basis.
    let mut over_basis = Vec::with_capacity(ngens);
    for g in gens {
        let mut quotients = vec![Polynomial::zero(&ring); nelems];
        let nf = engine.reduce(g.clone(), None, Some(&mut quotients), None);
        debug_assert!(nf.is_zero(), "generator must reduce to zero");
        over_basis.push(quotients);
    }

    // Schreyer syzygies among the basis elements, pairs by ascending degree.
    let mut pairs: Vec<(i64, usize, usize)> = Vec::new();
    for (pos, bucket) in engine.buckets.iter() {
        for (a, &u) in bucket.iter().enumerate() {
            for &v in bucket.iter().skip(a + 1) {
                let lcm = engine.lt(u).mono.lcm(&engine.lt(v).mono);
                let degree = lcm.degree() as i64 + ambient.degree(*pos);
                pairs.push((degree, u.min(v), u.max(v)));
            }
        }
    }
    pairs.sort();

    let mut out: Vec<VectorPoly> = Vec::new();
    let push = |coords: Vec<Polynomial>, out: &mut Vec<VectorPoly>| {
        let v = VectorPoly::from_entries(ngens, coords.into_iter().enumerate().collect());
        if !v.is_zero() {
            out.push(v);
        }
    };
    for &(_, u, v) in &pairs {
        let (mu, mv) = engine.spair_multipliers(u, v);
        let s = engine.basis[u]
            .v
            .mul_term(1, &mu)
            .sub(&engine.basis[v].v.mul_term(1, &mv));
        let mut quotients = vec![Polynomial::zero(&ring); nelems];
        let nf = engine.reduce(s, None, Some(&mut quotients), None);
        debug_assert!(nf.is_zero(), "S-vector of a Groebner basis reduces to zero");
        let mut sigma: Vec<Polynomial> = quotients.iter().map(Polynomial::neg).collect();
        sigma[u] = sigma[u].add(&Polynomial::term(&ring, 1, mu));
        sigma[v] = sigma[v].sub(&Polynomial::term(&ring, 1, mv));
        // convert to coordinates over the original generators
        let mut coords = vec![Polynomial::zero(&ring); ngens];
        for (k, q) in sigma.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (j, r) in gb.reps[k].iter().enumerate() {
                if !r.is_zero() {
                    coords[j] = coords[j].add(&q.mul(r)?);
                }
            }
        }
        push(coords, &mut out);
    }
    // difference syzygies: generator minus its expression over the basis
    for j in 0..ngens {
        let mut coords = vec![Polynomial::zero(&ring); ngens];
        coords[j] = Polynomial::one(&ring);
        for (k, q) in over_basis[j].iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (j2, r) in gb.reps[k].iter().enumerate() {
                if !r.is_zero() {
                    coords[j2] = coords[j2].sub(&q.mul(r)?);
                }
            }
        }
        push(coords, &mut out);
    }

    #[cfg(debug_assertions)]
    for s in &out {
        let mut acc = VectorPoly::zero(ambient.rank());
        for (j, c) in s.entries() {
            acc = acc.add(&gens[j].mul_poly(c)?);
        }
        debug_assert!(acc.is_zero(), "syzygy fails to annihilate the generators");
    }

    Ok(out)
}

/// An untracked Groebner basis grown one generator at a time. Used to
/// filter generating sets down to minimal ones: feed candidates in
/// ascending degree and drop those already reducing to zero.
pub struct IncrementalBasis {
    engine: Engine,
}

impl IncrementalBasis {
    pub fn new(ambient: &FreeModule) -> Self {
        IncrementalBasis {
            engine: Engine::new(ambient, 0),
        }
    }

    pub fn reduces_to_zero(&self, v: &VectorPoly) -> bool {
        self.engine.reduce(v.clone(), None, None, None).is_zero()
    }

    /// Insert a nonzero element and re-complete the basis.
    pub fn add_generator(&mut self, v: VectorPoly) {
        debug_assert!(!v.is_zero());
        self.engine.insert(v, Vec::new());
        self.engine.complete();
    }
}

/// Ambient for syzygies of the given homogeneous generators: one slot per
/// generator carrying the generator's degree (zero generators get 0).
pub fn syzygy_ambient(ambient: &FreeModule, gens: &[VectorPoly]) -> FreeModule {
    let degrees = gens
        .iter()
        .map(|g| match g.homogeneity(ambient) {
            ModHomogeneity::Homogeneous(d) => d,
            _ => 0,
        })
        .collect();
    FreeModule::new(ambient.ring(), degrees)
}
