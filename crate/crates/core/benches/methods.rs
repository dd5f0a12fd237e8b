use bigamma::{gamma_with_method, gamma_xz, Complex64, Method, TruncationPolicy};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn methods(c: &mut Criterion) {
    let policy = TruncationPolicy::default();
    let points = [
        ("real", Complex64::new(2.5, 0.0), Complex64::new(1.75, 0.0)),
        (
            "complex",
            Complex64::new(1.5, 0.5),
            Complex64::new(-0.75, 1.25),
        ),
        (
            "large",
            Complex64::new(60.0, 0.0),
            Complex64::new(40.0, 0.0),
        ),
    ];
    let mut group = c.benchmark_group("gamma_xz");
    for (label, x, z) in points {
        group.bench_with_input(BenchmarkId::new("auto", label), &(x, z), |b, &(x, z)| {
            b.iter(|| gamma_xz(black_box(x), black_box(z), &policy))
        });
        for m in [
            Method::Weierstrass,
            Method::EulerLimit,
            Method::EulerProduct,
            Method::Stirling,
        ] {
            if m == Method::Stirling && label == "complex" {
                continue;
            }
            group.bench_with_input(
                BenchmarkId::new(m.as_str(), label),
                &(x, z),
                |b, &(x, z)| b.iter(|| gamma_with_method(m, black_box(x), black_box(z), &policy)),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, methods);
criterion_main!(benches);
