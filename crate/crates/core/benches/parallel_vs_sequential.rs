use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kirillov::construct::{admissible_partitions, SimpleAlgebra};
use kirillov::index::index_of;
use kirillov::nilanalysis::partition_report;
use kirillov::par::{self, Mode};
use kirillov::RandomCfg;

const MODES: [(&str, Mode); 2] = [("sequential", Mode::Sequential), ("parallel", Mode::Parallel)];

/// Every orbit of so_7, fanned out the way the suite driver does it.
fn orbit_sweep(c: &mut Criterion) {
    let ty = "B3".parse().unwrap();
    let alg = SimpleAlgebra::matrix(ty).unwrap();
    let partitions = admissible_partitions(ty);
    let cfg = RandomCfg::default();
    let mut group = c.benchmark_group("orbit_sweep_B3");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_mode(mode);
            b.iter(|| par::map(&partitions, |p| partition_report(&alg, p, &cfg).unwrap().ind_z))
        });
    }
    group.finish();
}

/// Sampled generic rank of the Kirillov pencil of so_8 with many trials.
fn kirillov_rank(c: &mut Criterion) {
    let alg = SimpleAlgebra::matrix("D4".parse().unwrap()).unwrap();
    let cfg = RandomCfg {
        trials: 8,
        ..RandomCfg::default()
    };
    let mut group = c.benchmark_group("index_D4");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_mode(mode);
            b.iter(|| index_of(alg.algebra(), &cfg).unwrap().index)
        });
    }
    group.finish();
    par::set_mode(Mode::Parallel);
}

criterion_group!(benches, orbit_sweep, kirillov_rank);
criterion_main!(benches);
