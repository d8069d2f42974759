//! Parallel vs sequential throughput of the enumeration-heavy operations.
//!
//! `cargo bench` runs with the default `parallel` feature; with
//! `--no-default-features` the parallel mode falls back to the sequential
//! path and the two groups coincide.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use afgr::corpus;
use afgr::degeneration::component_upper_bound;
use afgr::exec::Mode;
use afgr::orders;
use afgr::polytope::{mv_polytope_sl3, Polytope};
use afgr::weyl::{elements_up_to_length, Coweight, FiniteWeylElt};

fn bench_upper_bound(c: &mut Criterion) {
    let theta = Coweight::new(vec![1, 0, -1]).unwrap();
    let hexagon = Polytope::from_coweights(
        &FiniteWeylElt::all(3)
            .iter()
            .map(|w| w.apply_coweight(&theta))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let trapezoid = mv_polytope_sl3(1, 0, 0, 1).unwrap();

    let mut group = c.benchmark_group("component_upper_bound");
    for mode in [Mode::Sequential, Mode::Parallel] {
        group.bench_with_input(
            BenchmarkId::new("hexagon_d4", format!("{:?}", mode)),
            &mode,
            |b, &mode| {
                b.iter(|| component_upper_bound(&hexagon, 4, 1_000_000, mode).unwrap())
            },
        );
        group.bench_with_input(
            BenchmarkId::new("trapezoid_d3", format!("{:?}", mode)),
            &mode,
            |b, &mode| {
                b.iter(|| component_upper_bound(&trapezoid, 3, 1_000_000, mode).unwrap())
            },
        );
    }
    group.finish();
}

fn bench_order_crosscheck(c: &mut Criterion) {
    let elts = elements_up_to_length(3, 4);
    let w0 = FiniteWeylElt::longest(3);
    let pairs: Vec<(usize, usize)> = (0..elts.len())
        .flat_map(|i| (0..elts.len()).map(move |j| (i, j)))
        .collect();

    let mut group = c.benchmark_group("semiinf_crosscheck");
    group.sample_size(20);
    for mode in [Mode::Sequential, Mode::Parallel] {
        group.bench_with_input(
            BenchmarkId::new("sl3_len4", format!("{:?}", mode)),
            &mode,
            |b, &mode| {
                b.iter(|| {
                    let results = afgr::exec::map_collect(mode, &pairs, |&(i, j)| {
                        let lat = orders::semiinf_leq_lattice(&elts[i], &elts[j], &w0).unwrap();
                        let cone = orders::semiinf_leq_cone(&elts[i], &elts[j], &w0).unwrap();
                        assert_eq!(lat, cone);
                        lat
                    });
                    results.iter().filter(|&&b| b).count()
                })
            },
        );
    }
    group.finish();
}

fn bench_corpus(c: &mut Criterion) {
    let mut group = c.benchmark_group("golden_corpus");
    group.sample_size(20);
    for mode in [Mode::Sequential, Mode::Parallel] {
        group.bench_with_input(
            BenchmarkId::new("all_cases", format!("{:?}", mode)),
            &mode,
            |b, &mode| b.iter(|| corpus::run_corpus(corpus::DEFAULT_CAP, mode).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_upper_bound, bench_order_crosscheck, bench_corpus);
criterion_main!(benches);
