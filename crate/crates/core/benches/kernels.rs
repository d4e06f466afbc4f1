use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ncps_core::hopf::{convolve_with, LinearForm};
use ncps_core::random::{rng_for, RandomSpec};
use ncps_core::verify::{self, VerifyOptions};
use ncps_core::Execution;

const STRATEGIES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn convolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("convolve");
    group.sample_size(10);
    for (d, n) in [(2, 5), (3, 4)] {
        let spec = RandomSpec::new(d, n);
        let a: LinearForm = LinearForm::materialize(&spec.character(&mut rng_for(1, "bench-a", 0)).unwrap());
        let b = spec.form(&mut rng_for(1, "bench-b", 0)).unwrap();
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, format!("d{d}n{n}")), &exec, |bench, &exec| {
                bench.iter(|| convolve_with(exec, black_box(&a), black_box(&b)).unwrap())
            });
        }
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        let mut opts = VerifyOptions::new(2, 3, 8, 42);
        opts.execution = exec;
        opts.only = Some(vec![
            "group-associativity".into(),
            "pre-lie-identity".into(),
            "free-oracle".into(),
        ]);
        group.bench_function(name, |bench| bench.iter(|| verify::run(black_box(&opts)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, convolution, verification);
criterion_main!(benches);
