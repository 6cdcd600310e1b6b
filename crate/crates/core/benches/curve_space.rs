use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use digitop::curve_space::{build_poset, count_grid_cycles, enumerate_curves};
use digitop::homotopy::morph;
use digitop::{DigitalPlane, Exec, PlaneSpec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn poset(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_poset");
    group.sample_size(10);
    for spec in [PlaneSpec::khalimsky_open_corner(5, 5), PlaneSpec::khalimsky(6, 6)] {
        let plane = DigitalPlane::new(spec).unwrap();
        let curves = enumerate_curves(&plane).unwrap();
        let label = format!("{}x{}", spec.width, spec.height);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, &label), &curves, |b, curves| {
                b.iter(|| build_poset(&plane, curves.clone(), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn grid_cycles(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_grid_cycles");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, 4), &4, |b, &n| {
            b.iter(|| count_grid_cycles(n, exec).unwrap())
        });
    }
    group.finish();
}

fn morphs(c: &mut Criterion) {
    let plane = DigitalPlane::khalimsky(6, 6).unwrap();
    let curves = enumerate_curves(&plane).unwrap();
    let (a, b) = (&curves[0], &curves[curves.len() - 1]);
    c.bench_function("morph_6x6", |bench| bench.iter(|| morph(&plane, a, b).unwrap()));
}

criterion_group!(benches, poset, grid_cycles, morphs);
criterion_main!(benches);
