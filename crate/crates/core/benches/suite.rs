use criterion::{criterion_group, criterion_main, Criterion};
use zetaforge::corpus::{evaluate_suite, Filter};

/// The `E1` records on one thread and on the default pool (all cores). Build
/// with `--no-default-features` to compare against the sequential fallback.
fn corpus_slice(c: &mut Criterion) {
    let filter: Filter = "E1".parse().expect("valid prefix");
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for (name, jobs) in [("sequential", Some(1)), ("parallel", None)] {
        group.bench_function(name, |b| {
            b.iter(|| {
                let rows = evaluate_suite(Some(&filter), jobs).expect("suite runs");
                assert!(rows.iter().all(|r| r.pass));
                rows
            })
        });
    }
    group.finish();
}

criterion_group!(benches, corpus_slice);
criterion_main!(benches);
