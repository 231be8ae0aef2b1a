//! Benchmarks for the hot paths: family construction, high-degree polynomial
//! members, exact ladder application, quadrature, and the eigensolver.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use xhermite::families::{eop_second, wronskian_g, Ham};
use xhermite::numerics::{fd_spectrum, norm_of_state, FdGrid};
use xhermite::operators::ladder_action;
use xhermite::{ExtendedFamily, FamilyParams, LadderOp, QuadratureSpec};

fn bench_family_build(c: &mut Criterion) {
    c.bench_function("family_build_4_7", |b| {
        b.iter(|| ExtendedFamily::from_indices(black_box(4), black_box(7)).unwrap())
    });
}

fn bench_wronskian(c: &mut Criterion) {
    let p = FamilyParams::new(4, 7).unwrap();
    c.bench_function("wronskian_4_7", |b| b.iter(|| wronskian_g(black_box(&p))));
}

fn bench_eop_second(c: &mut Criterion) {
    let p = FamilyParams::new(2, 7).unwrap();
    c.bench_function("eop_second_2_7_n20", |b| {
        b.iter(|| eop_second(black_box(&p), black_box(20)).unwrap())
    });
}

fn bench_ladder_action(c: &mut Criterion) {
    let fam = ExtendedFamily::from_indices(2, 3).unwrap();
    c.bench_function("ladder_c_2_3_nu6", |b| {
        b.iter(|| ladder_action(black_box(&fam), LadderOp::C, black_box(6)).unwrap())
    });
}

fn bench_norm_quadrature(c: &mut Criterion) {
    let fam = ExtendedFamily::from_indices(2, 5).unwrap();
    let w = fam.wavefunction(Ham::H2, 2).unwrap();
    let spec = QuadratureSpec::default();
    c.bench_function("norm_quadrature_2_5_nu2", |b| {
        b.iter(|| norm_of_state(black_box(&spec), black_box(&w)).unwrap())
    });
}

fn bench_fd_spectrum(c: &mut Criterion) {
    let fam = ExtendedFamily::from_indices(2, 3).unwrap();
    let grid = FdGrid::new(8.0, 800).unwrap();
    c.bench_function("fd_spectrum_2_3_5_levels", |b| {
        b.iter(|| fd_spectrum(black_box(fam.v2()), black_box(&grid), 5).unwrap())
    });
}

criterion_group!(
    benches,
    bench_family_build,
    bench_wronskian,
    bench_eop_second,
    bench_ladder_action,
    bench_norm_quadrature,
    bench_fd_spectrum
);
criterion_main!(benches);
