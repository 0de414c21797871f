use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use phcurves::algebra::{int, rat, RealPolynomial};
use phcurves::hermite::default_basis;
use phcurves::quaternion::qpoly;
use phcurves::residue::single_pole_basis;
use phcurves::{
    envelope_curve, factor_hodograph, hermite_c1, hodograph_f, osculating_normals,
    solve_linear_system, CurveKind, HermiteData, HyperplaneFamily, QuaternionPolynomial,
    RationalFunction,
};

fn preimage() -> QuaternionPolynomial {
    qpoly(&[[0, 1, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])
}

fn methods(c: &mut Criterion) {
    let a = preimage();
    let alpha = RealPolynomial::monomial(int(1), 4);
    c.bench_function("linear deg 8", |b| {
        b.iter(|| solve_linear_system(black_box(&a), &alpha, 8, None).unwrap())
    });
    c.bench_function("residue basis -7..=1", |b| {
        b.iter(|| single_pole_basis(black_box(&a), &int(0), -7..=1, CurveKind::ArcLength).unwrap())
    });
    c.bench_function("osculating normals deg 6", |b| {
        b.iter(|| osculating_normals(black_box(&a), 6))
    });
    let normal = osculating_normals(&a, 6).remove(0);
    let family = HyperplaneFamily {
        normal,
        offset: RationalFunction::new(RealPolynomial::one(), RealPolynomial::monomial(int(1), 1)),
    };
    c.bench_function("envelope", |b| {
        b.iter(|| envelope_curve(black_box(&family)).unwrap())
    });
    let basis = default_basis(&a, &int(0)).unwrap();
    let data = HermiteData {
        t0: rat(1, 2),
        t1: int(2),
        p0: vec![int(0); 3],
        p1: vec![rat(3, 10), int(-7), rat(-9, 10)],
        d0: vec![rat(3, 37), rat(-36, 37), rat(-8, 37)],
        d1: vec![rat(-6, 11), rat(-9, 11), rat(2, 11)],
    };
    c.bench_function("hermite", |b| {
        b.iter(|| hermite_c1(black_box(&a), &data, &basis).unwrap())
    });
    let f = hodograph_f(&a);
    c.bench_function("factor hodograph", |b| {
        b.iter(|| factor_hodograph(black_box(&f)).unwrap())
    });
}

criterion_group!(benches, methods);
criterion_main!(benches);
