use atinf_bench::pipeline_inputs;
use atinf_core::analysis::{analyze, AnalysisOptions};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn pipeline(c: &mut Criterion) {
    let mut g = c.benchmark_group("analyze");
    g.sample_size(10);
    for (name, f, conc) in pipeline_inputs() {
        let opts = AnalysisOptions { assume_concentrated: conc, ..Default::default() };
        g.bench_with_input(BenchmarkId::from_parameter(name), &f, |b, f| {
            b.iter(|| analyze(f, &opts).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
