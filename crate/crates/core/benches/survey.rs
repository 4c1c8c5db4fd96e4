use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use plabic_seed::autgroup::{survey, SurveyConfig};
use plabic_seed::braid::parse_word;
use plabic_seed::{analyze, Execution, Permutation};

fn bench_survey(c: &mut Criterion) {
    let mut group = c.benchmark_group("survey");
    group.sample_size(10);
    for (n, max_len) in [(3, 6), (4, 5)] {
        for execution in [Execution::Sequential, Execution::Parallel] {
            let config = SurveyConfig { execution, ..SurveyConfig::new(n, 1, max_len) };
            let id = BenchmarkId::new(format!("{execution:?}"), format!("n{n}_len{max_len}"));
            group.bench_with_input(id, &config, |b, config| b.iter(|| survey(black_box(config)).unwrap()));
        }
    }
    group.finish();
}

fn bench_analyze(c: &mut Criterion) {
    let u = Permutation::parse_word("4 3 4", 6).unwrap();
    let beta = parse_word("5 4 3 2 1 4 3 4 2 5 3 4 5", 6).unwrap();
    c.bench_function("analyze/six_strands", |b| b.iter(|| analyze(black_box(&u), black_box(&beta)).unwrap()));
}

criterion_group!(benches, bench_survey, bench_analyze);
criterion_main!(benches);
