use criterion::{black_box, criterion_group, criterion_main, Criterion};
use fpbetti::pipeline::{fiber_spec, oracle_betti};
use fpbetti::OracleLimits;
use fpbetti_bench::{fixture, FIXTURES};

fn oracle(c: &mut Criterion) {
    let limits = OracleLimits { max_generators: 24 };
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for (name, text) in FIXTURES {
        let fiber = fiber_spec(&fixture(text), limits).unwrap();
        group.bench_function(*name, |b| {
            b.iter(|| oracle_betti(black_box(&fiber), limits).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, oracle);
criterion_main!(benches);
