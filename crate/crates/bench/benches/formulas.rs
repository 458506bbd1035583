use criterion::{black_box, criterion_group, criterion_main, Criterion};
use fpbetti::{betti_fiber, poincare_fiber, poincare_from_betti, BettiSequence};

fn formulas(c: &mut Criterion) {
    let bi = BettiSequence::from_u64s(&[1, 3, 3, 1]);
    let bip = BettiSequence::from_u64s(&[1, 2, 1]);
    c.bench_function("betti_fiber", |b| {
        b.iter(|| betti_fiber(black_box(40), black_box(30), 2, 1, &bi, &bip).unwrap())
    });
    let pi = poincare_from_betti(&bi);
    let pip = poincare_from_betti(&bip);
    c.bench_function("poincare_fiber", |b| {
        b.iter(|| poincare_fiber(black_box(40), black_box(30), 2, 1, &pi, &pip).unwrap())
    });
}

criterion_group!(benches, formulas);
criterion_main!(benches);
