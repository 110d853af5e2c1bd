//! Benchmarks the verification workload in parallel and sequential modes.
//!
//! The corpora are built once outside the timed region; the measured part is
//! the batch of independent pure checks, comparing the rayon fan-out against
//! the single-threaded fallback on identical inputs.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::time::Duration;

use rotamap::exec::Mode;
use rotamap::verify::{
    rotary_corpus, run_classification_checks, run_cycle_checks, run_triple_checks, theorem_corpus,
};

fn bench_checks(c: &mut Criterion) {
    let triples = theorem_corpus();
    let pairs = rotary_corpus();
    let mut group = c.benchmark_group("verify-checks");
    group
        .sample_size(10)
        .measurement_time(Duration::from_secs(15));
    for (label, mode) in [
        ("parallel", Mode::Parallel),
        ("sequential", Mode::Sequential),
    ] {
        group.bench_with_input(
            BenchmarkId::new("coset-theorems", label),
            &mode,
            |b, &mode| {
                b.iter(|| {
                    let checks = run_triple_checks(triples.clone(), mode);
                    assert!(checks.iter().all(|c| c.pass));
                    checks.len()
                })
            },
        );
        group.bench_with_input(
            BenchmarkId::new("canonical-cycles", label),
            &mode,
            |b, &mode| {
                b.iter(|| {
                    let checks = run_cycle_checks(pairs.clone(), mode);
                    assert!(checks.iter().all(|c| c.pass));
                    checks.len()
                })
            },
        );
        group.bench_with_input(
            BenchmarkId::new("classification", label),
            &mode,
            |b, &mode| {
                b.iter(|| {
                    let checks = run_classification_checks(pairs.clone(), mode);
                    assert!(checks.iter().all(|c| c.pass));
                    checks.len()
                })
            },
        );
    }
    group.finish();
}

criterion_group!(benches, bench_checks);
criterion_main!(benches);
