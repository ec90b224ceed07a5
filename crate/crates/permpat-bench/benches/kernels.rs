use criterion::{black_box, criterion_group, criterion_main, Criterion};

use permpat::bijection::phi;
use permpat::genome::{ball_pegs, bfs_ball, BlockOp, DEFAULT_CAP};
use permpat::oracle::{class_members, enumerate_class, AvoidanceQuery, Budget};
use permpat::peg::{polyclass_enumerate, polyclass_stream};
use permpat::perm::count_occurrences;
use permpat::series::{assemble_av1342, catalog};
use permpat::Permutation;

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn patterns(c: &mut Criterion) {
    let long: Permutation = "9 14 3 12 1 7 16 5 11 2 15 8 4 13 6 10".parse().unwrap();
    let pattern = perm("2413");
    c.bench_function("count_occurrences 2413 in length 16", |b| {
        b.iter(|| count_occurrences(black_box(&pattern), black_box(&long)))
    });
    let budget = Budget::default();
    c.bench_function("enumerate Av_10(1324)", |b| {
        let q = AvoidanceQuery::new(vec![perm("1324")], 10).unwrap();
        b.iter(|| enumerate_class(black_box(&q), &budget).unwrap())
    });
    let members =
        class_members(&AvoidanceQuery::new(vec![perm("132")], 9).unwrap(), &budget).unwrap();
    c.bench_function("phi over Av_9(132)", |b| {
        b.iter(|| {
            members
                .iter()
                .map(|p| phi(p).unwrap().semilength())
                .sum::<usize>()
        })
    });
}

fn classes(c: &mut Criterion) {
    let pegs = ball_pegs(BlockOp::BlockTransposition, 2, DEFAULT_CAP).unwrap();
    let mut g = c.benchmark_group("block transpositions k=2");
    g.sample_size(10);
    g.bench_function("full completion", |b| {
        b.iter(|| polyclass_enumerate(black_box(&pegs)).unwrap())
    });
    g.bench_function("streamed completion", |b| {
        b.iter(|| polyclass_stream(black_box(&pegs)).unwrap())
    });
    g.bench_function("search at n = 8", |b| {
        b.iter(|| bfs_ball(BlockOp::BlockTransposition, 2, 8).unwrap())
    });
    g.finish();
}

fn series(c: &mut Criterion) {
    c.bench_function("num213 to order 100", |b| {
        b.iter(|| catalog("num213", 100).unwrap())
    });
    let mut g = c.benchmark_group("fixed points");
    g.sample_size(10);
    g.bench_function("assemble_av1342 to order 30", |b| {
        b.iter(|| assemble_av1342(30).unwrap())
    });
    g.finish();
}

criterion_group!(benches, patterns, classes, series);
criterion_main!(benches);
