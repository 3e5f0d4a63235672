//! Shared test support: an exact degreewise linear-algebra oracle for
//! submodule spans, syzygies and Hom dimensions, implemented with its own
//! row reduction and monomial enumeration so it stays independent of the
//! Groebner path it cross-checks; plus the shared fixture corpus.

#![allow(dead_code)]

use std::sync::OnceLock;

use endoring_core::constructions::{
    generic_determinantal, koszul_cycles, koszul_ring, one_relation_module,
};
use endoring_core::fpmodules::{direct_sum, FPModule};
use endoring_core::groebner::{FreeModule, VectorPoly};
use endoring_core::polyring::{parse_polynomial, Monomial, Polynomial, PrimeField, Ring};

// ---------------------------------------------------------------------
// scalar arithmetic and row reduction, self-contained
// ---------------------------------------------------------------------

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "not invertible");
    (((t0 % p as i128) + p as i128) % p as i128) as u64
}

/// Rank of a dense matrix over F_p by plain Gaussian elimination.
pub fn oracle_rank(p: u64, mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col] % p, p);
        for c in col..ncols {
            rows[rank][c] = rows[rank][c] % p * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] % p != 0 {
                let factor = rows[r][col] % p;
                for c in col..ncols {
                    let sub = factor * rows[rank][c] % p;
                    rows[r][c] = (rows[r][c] % p + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// All exponent vectors of total degree `d` in `n` variables, own
/// enumeration.
pub fn oracle_monomials(n: usize, d: i64) -> Vec<Vec<u16>> {
    if d < 0 {
        return Vec::new();
    }
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in oracle_monomials(n - 1, d - first) {
            let mut v = vec![first as u16];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// Index of the module monomials of an ambient free module at one degree.
struct DegreeBasis {
    index: std::collections::HashMap<(usize, Vec<u16>), usize>,
    len: usize,
}

fn degree_basis(ambient: &FreeModule, d: i64) -> DegreeBasis {
    let n = ambient.ring().nvars();
    let mut index = std::collections::HashMap::new();
    let mut len = 0;
    for pos in 0..ambient.rank() {
        for m in oracle_monomials(n, d - ambient.degree(pos)) {
            index.insert((pos, m), len);
            len += 1;
        }
    }
    DegreeBasis { index, len }
}

fn vector_in_degree(basis: &DegreeBasis, v: &VectorPoly) -> Vec<u64> {
    let mut row = vec![0u64; basis.len];
    for (pos, poly) in v.entries() {
        for (c, m) in poly.terms() {
            let key = (pos, m.exponents().to_vec());
            let slot = basis.index.get(&key).expect("degree mismatch in oracle");
            row[*slot] = *c;
        }
    }
    row
}

/// Dimension of the degree-`d` piece of the submodule generated by
/// homogeneous `gens`.
pub fn oracle_span_dim(ambient: &FreeModule, gens: &[VectorPoly], d: i64) -> usize {
    let p = ambient.ring().field().p();
    let n = ambient.ring().nvars();
    let basis = degree_basis(ambient, d);
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let delta = g.degree_in(ambient).expect("homogeneous");
        for m in oracle_monomials(n, d - delta) {
            let mono = Monomial::from_exponents(m);
            let shifted = g.mul_term(1, &mono);
            rows.push(vector_in_degree(&basis, &shifted));
        }
    }
    oracle_rank(p, rows)
}

/// Is the homogeneous vector in the span of the generators (in its own
/// degree)?
pub fn oracle_contains(ambient: &FreeModule, gens: &[VectorPoly], v: &VectorPoly) -> bool {
    if v.is_zero() {
        return true;
    }
    let d = v.degree_in(ambient).expect("homogeneous");
    let with = {
        let mut g = gens.to_vec();
        g.push(v.clone());
        g
    };
    oracle_span_dim(ambient, gens, d) == oracle_span_dim(ambient, &with, d)
}

/// Dimension of the degree-`d` syzygies of the generators: kernel of the
/// evaluation map from the direct sum of twisted copies of the ring.
pub fn oracle_syzygy_dim(ambient: &FreeModule, gens: &[VectorPoly], d: i64) -> usize {
    let p = ambient.ring().field().p();
    let n = ambient.ring().nvars();
    let basis = degree_basis(ambient, d);
    // columns: (generator j, monomial of degree d - deg g_j)
    let mut cols = Vec::new();
    for g in gens {
        let delta = if g.is_zero() {
            0
        } else {
            g.degree_in(ambient).expect("homogeneous")
        };
        for m in oracle_monomials(n, d - delta) {
            let mono = Monomial::from_exponents(m);
            cols.push(vector_in_degree(&basis, &g.mul_term(1, &mono)));
        }
    }
    if cols.is_empty() {
        return 0;
    }
    let ncols = cols.len();
    // transpose into rows-of-the-map
    let rows = (0..basis.len)
        .map(|i| cols.iter().map(|c| c[i]).collect::<Vec<_>>())
        .collect::<Vec<_>>();
    ncols - oracle_rank(p, rows)
}

/// Hilbert function of a presented module at one degree, from the oracle.
pub fn oracle_module_dim(module: &FPModule, d: i64) -> usize {
    let basis = degree_basis(module.ambient(), d);
    basis.len - oracle_span_dim(module.ambient(), module.relations(), d)
}

/// Dimension of degree-`s` morphisms A -> B by the well-definedness
/// linear system: matrices X with homogeneous entries of forced degrees
/// with X * rel(A) inside the relation span of B, modulo matrices whose
/// columns all lie in the relation span.
pub fn oracle_hom_dim(a: &FPModule, b: &FPModule, s: i64) -> usize {
    let ring = a.ring();
    let p = ring.field().p();
    let n = ring.nvars();
    let ra = a.ambient().rank();
    let rb = b.ambient().rank();
    // unknown layout: for each (i, j), the monomial coefficients of X[i][j]
    let mut slots: Vec<(usize, usize, Vec<u16>)> = Vec::new();
    for i in 0..rb {
        for j in 0..ra {
            let t = a.ambient().degree(j) + s - b.ambient().degree(i);
            for m in oracle_monomials(n, t) {
                slots.push((i, j, m));
            }
        }
    }
    let nu = slots.len();
    // relation span bases of B per needed degree
    let rel_span_cols = |d: i64| -> Vec<Vec<u64>> {
        let basis = degree_basis(b.ambient(), d);
        let mut cols = Vec::new();
        for g in b.relations() {
            let delta = g.degree_in(b.ambient()).expect("homogeneous");
            for m in oracle_monomials(n, d - delta) {
                let mono = Monomial::from_exponents(m);
                cols.push(vector_in_degree(&basis, &g.mul_term(1, &mono)));
            }
        }
        cols
    };
    // per relation: (degree basis of B at e+s, X-coefficient rows, span)
    struct Block {
        basis: DegreeBasis,
        x_rows: Vec<Vec<u64>>,
        span: Vec<Vec<u64>>,
    }
    let mut blocks_data = Vec::new();
    for w in a.relations() {
        let e = w.degree_in(a.ambient()).expect("homogeneous");
        let d = e + s;
        let basis = degree_basis(b.ambient(), d);
        let span = rel_span_cols(d);
        // linear map from X-unknowns: coefficient of each module monomial
        // of B at degree d in X*w
        let mut x_rows = vec![vec![0u64; nu]; basis.len];
        for (slot, (i, j, mexp)) in slots.iter().enumerate() {
            let Some(wj) = w.entry(*j) else { continue };
            let xm = Monomial::from_exponents(mexp.clone());
            for (c, wm) in wj.terms() {
                let prod = xm.mul(wm);
                let key = (*i, prod.exponents().to_vec());
                let row = basis.index.get(&key).expect("degree bookkeeping");
                x_rows[*row][slot] = (x_rows[*row][slot] + c) % p;
            }
        }
        blocks_data.push(Block {
            basis,
            x_rows,
            span,
        });
    }
    let total_aux: usize = blocks_data.iter().map(|b| b.span.len()).sum();
    let aux_nullity: usize = blocks_data
        .iter()
        .map(|blk| {
            let rank = oracle_rank(
                p,
                (0..blk.basis.len)
                    .map(|i| blk.span.iter().map(|c| c[i]).collect())
                    .collect(),
            );
            blk.span.len() - rank
        })
        .sum();
    // joint system [L | -S] over unknowns (X, y)
    let total_cols = nu + total_aux;
    let mut big: Vec<Vec<u64>> = Vec::new();
    let mut aux_off = 0usize;
    for blk in &blocks_data {
        for local in 0..blk.basis.len {
            let mut row = vec![0u64; total_cols];
            row[..nu].copy_from_slice(&blk.x_rows[local]);
            for (k, col) in blk.span.iter().enumerate() {
                row[nu + aux_off + k] = (p - col[local] % p) % p;
            }
            big.push(row);
        }
        aux_off += blk.span.len();
    }
    let joint_kernel = total_cols - oracle_rank(p, big);
    let w_dim = joint_kernel - aux_nullity;
    // subtract matrices inducing the zero morphism: each column free in
    // the relation span of its degree
    let mut zero_dim = 0usize;
    for j in 0..ra {
        let d = a.ambient().degree(j) + s;
        let basis = degree_basis(b.ambient(), d);
        let span = rel_span_cols(d);
        zero_dim += oracle_rank(
            p,
            (0..basis.len)
                .map(|i| span.iter().map(|c| c[i]).collect())
                .collect(),
        );
    }
    w_dim - zero_dim
}

// ---------------------------------------------------------------------
// fixture corpus
// ---------------------------------------------------------------------

pub struct Corpus {
    pub named: Vec<(&'static str, FPModule)>,
}

pub fn field() -> PrimeField {
    PrimeField::default_field()
}

pub fn ring2() -> Ring {
    endoring_core::polyring::standard_ring(32003, &["x", "y"]).unwrap()
}

pub fn ring1() -> Ring {
    endoring_core::polyring::standard_ring(32003, &["x"]).unwrap()
}

pub fn quotient(ring: &Ring, gens: &[&str]) -> FPModule {
    let polys: Vec<Polynomial> = gens
        .iter()
        .map(|t| parse_polynomial(t, ring).unwrap())
        .collect();
    FPModule::cyclic(ring, &polys).unwrap()
}

pub fn maximal_ideal_2v() -> FPModule {
    let r = ring2();
    let ambient = FreeModule::new(&r, vec![1, 1]);
    let rel = VectorPoly::from_entries(
        2,
        vec![
            (0, parse_polynomial("y", &r).unwrap()),
            (1, parse_polynomial("-x", &r).unwrap()),
        ],
    );
    FPModule::new(ambient, vec![rel]).unwrap()
}

pub fn one_relation_xyz() -> FPModule {
    let ring = koszul_ring(field(), 3).unwrap();
    let vars: Vec<Polynomial> = (0..3).map(|v| Polynomial::variable(&ring, v)).collect();
    one_relation_module(&vars).unwrap().module
}

pub fn regular_quotient(n: usize) -> FPModule {
    let ring = koszul_ring(field(), n).unwrap();
    let vars: Vec<Polynomial> = (0..n).map(|v| Polynomial::variable(&ring, v)).collect();
    FPModule::cyclic(&ring, &vars).unwrap()
}

static CORPUS: OnceLock<Corpus> = OnceLock::new();

/// The shared fixture corpus used by the bound, bar-dimension and trace
/// criteria.
pub fn corpus() -> &'static Corpus {
    CORPUS.get_or_init(|| {
        let r2 = ring2();
        let r1 = ring1();
        let free1 = FPModule::ring_module(&r2);
        let free2 = FPModule::free(&r2, vec![0, 0]);
        let free3 = FPModule::free(&r2, vec![0, 0, 0]);
        let rx1 = quotient(&r1, &["x"]);
        let rx = quotient(&r2, &["x"]);
        let ry = quotient(&r2, &["y"]);
        let named = vec![
            ("R", free1.clone()),
            ("R^2", free2),
            ("R^3", free3),
            ("R/(x)", rx1),
            ("R + R/(x)", direct_sum(&free1, &rx).unwrap()),
            ("R/(x) + R/(y)", direct_sum(&rx, &ry).unwrap()),
            ("ideal (x,y)", maximal_ideal_2v()),
            ("Z1(K3)", koszul_cycles(field(), 3, 1).unwrap()),
            ("Z1(K5)", koszul_cycles(field(), 5, 1).unwrap()),
            ("one-relation (x,y,z)", one_relation_xyz()),
            (
                "det(2,3)",
                generic_determinantal(field(), 2, 3).unwrap().module,
            ),
        ];
        Corpus { named }
    })
}
