use std::hint::black_box;

use cauchon_core::diagram::enumerate;
use cauchon_core::minors::{cross_validate_with, generators_with};
use cauchon_core::pathmatrix::path_matrix_with;
use cauchon_core::{CauchonDiagram, CauchonGraph, Exec};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn path_matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("path_matrix");
    for (m, n) in [(4, 5), (5, 5), (5, 6)] {
        let g = CauchonGraph::build(&CauchonDiagram::all_white(m, n));
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("{m}x{n}")), &g, |b, g| {
                b.iter(|| path_matrix_with(black_box(g), usize::MAX, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn cross_validate(c: &mut Criterion) {
    let mut group = c.benchmark_group("cross_validate");
    group.sample_size(10);
    for (m, n) in [(4, 4), (4, 5)] {
        let d = CauchonDiagram::all_white(m, n);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("{m}x{n}")), &d, |b, d| {
                b.iter(|| cross_validate_with(black_box(d), usize::MAX, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn census_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("census_3x4");
    group.sample_size(10);
    let diagrams: Vec<CauchonDiagram> = enumerate(3, 4).collect();
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                diagrams
                    .iter()
                    .map(|d| generators_with(black_box(d), exec).len())
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, path_matrix, cross_validate, census_batch);
criterion_main!(benches);
