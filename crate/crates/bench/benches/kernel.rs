//! Benchmarks for the computation kernel: Buchberger completion, normal
//! forms, syzygies, Hom modules and locality decisions on the standard
//! fixtures.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use endoring_core::constructions::{koszul_cycles, koszul_ring};
use endoring_core::endoscope::is_local_module;
use endoring_core::fpmodules::{free_resolution, hom, FPModule};
use endoring_core::groebner::{syzygy_basis, FreeModule, GroebnerBasis, VectorPoly};
use endoring_core::polyring::{parse_polynomial, Polynomial, PrimeField};

fn power_ideal_gens() -> (FreeModule, Vec<VectorPoly>) {
    let ring = endoring_core::polyring::standard_ring(32003, &["x", "y", "z"]).unwrap();
    let texts = ["x^3 - y^2*z", "x*y^2 - z^3", "y^3 - x^2*z"];
    let ambient = FreeModule::new(&ring, vec![0]);
    let gens = texts
        .iter()
        .map(|t| VectorPoly::from_entry(1, 0, parse_polynomial(t, &ring).unwrap()))
        .collect();
    (ambient, gens)
}

fn bench_buchberger(c: &mut Criterion) {
    let (ambient, gens) = power_ideal_gens();
    c.bench_function("buchberger cubic ideal", |b| {
        b.iter(|| GroebnerBasis::compute(black_box(&ambient), black_box(gens.clone())).unwrap())
    });
}

fn bench_normal_form(c: &mut Criterion) {
    let (ambient, gens) = power_ideal_gens();
    let gb = GroebnerBasis::compute(&ambient, gens).unwrap();
    let ring = ambient.ring().clone();
    let probe = VectorPoly::from_entry(
        1,
        0,
        parse_polynomial("x^5*y^2 + y^4*z^3 - x*z^6", &ring).unwrap(),
    );
    c.bench_function("normal form degree 7", |b| {
        b.iter(|| gb.normal_form(black_box(&probe)).unwrap())
    });
}

fn bench_syzygies(c: &mut Criterion) {
    let ring = koszul_ring(PrimeField::default_field(), 4).unwrap();
    let ambient = FreeModule::new(&ring, vec![0]);
    let gens: Vec<VectorPoly> = (0..4)
        .map(|v| VectorPoly::from_entry(1, 0, Polynomial::variable(&ring, v)))
        .collect();
    c.bench_function("syzygies of four variables", |b| {
        b.iter(|| syzygy_basis(black_box(&ambient), black_box(&gens)).unwrap())
    });
}

fn bench_end_module(c: &mut Criterion) {
    let z1 = koszul_cycles(PrimeField::default_field(), 4, 1).unwrap();
    c.bench_function("end module of Z1(K4)", |b| {
        b.iter(|| hom(black_box(&z1), black_box(&z1)).unwrap())
    });
}

fn bench_locality(c: &mut Criterion) {
    let z1 = koszul_cycles(PrimeField::default_field(), 4, 1).unwrap();
    c.bench_function("locality of Z1(K4)", |b| {
        b.iter(|| is_local_module(black_box(&z1), 0).unwrap())
    });
}

fn bench_resolution(c: &mut Criterion) {
    let ring = koszul_ring(PrimeField::default_field(), 4).unwrap();
    let m = FPModule::cyclic(
        &ring,
        &(0..4)
            .map(|v| Polynomial::variable(&ring, v))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    c.bench_function("resolution of a length-4 regular quotient", |b| {
        b.iter(|| free_resolution(black_box(&m), 5).unwrap())
    });
}

criterion_group!(
    name = kernel;
    config = Criterion::default().sample_size(20);
    targets = bench_buchberger, bench_normal_form, bench_syzygies, bench_end_module,
        bench_locality, bench_resolution
);
criterion_main!(kernel);
