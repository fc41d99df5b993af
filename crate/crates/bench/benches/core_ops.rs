use criterion::{black_box, criterion_group, criterion_main, Criterion};

use braided_core::crossed::check_dy_braiding;
use braided_core::examples::double::{normal_order, Gen, NCWord};
use braided_core::examples::lines::anyonic_line;
use braided_core::hopf::Variant;
use braided_core::scalars::Field;
use braided_core::suites::{braiding_family, fermion_setup};

fn normal_ordering(c: &mut Criterion) {
    let f = Field::RationalFunctions;
    let mut w = vec![Gen::Y; 4];
    w.extend([Gen::X; 4]);
    let word = NCWord::word(f, w, f.one());
    c.bench_function("normal_order y^4 x^4", |b| {
        b.iter(|| normal_order(black_box(&word)))
    });
}

fn hopf_axioms(c: &mut Criterion) {
    let a = anyonic_line(4);
    c.bench_function("hopf check anyonic-line:4", |b| {
        b.iter(|| a.check(Variant::Hopf).unwrap())
    });
}

fn cross_product(c: &mut Criterion) {
    c.bench_function("kZ2 x fermionic line", |b| b.iter(fermion_setup));
}

fn dy_braiding(c: &mut Criterion) {
    let (a, mods, maps) = braiding_family(2).unwrap();
    let refs: Vec<_> = mods.iter().collect();
    c.bench_function("dy braiding n=2", |b| {
        b.iter(|| check_dy_braiding(&a, &refs, &maps).unwrap())
    });
}

criterion_group!(
    benches,
    normal_ordering,
    hopf_axioms,
    cross_product,
    dy_braiding
);
criterion_main!(benches);
