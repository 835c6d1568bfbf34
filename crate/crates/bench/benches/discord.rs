use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use weakdiscord_core::states::{random_dqc1, random_mixed, RandomStateSpec};
use weakdiscord_core::{discord, weak_discord_with};

fn two_qubit(c: &mut Criterion) {
    let rho = random_mixed(RandomStateSpec::new(3, 7).unwrap()).unwrap();
    c.bench_function("discord/two-qubit", |b| b.iter(|| discord(black_box(&rho)).unwrap()));
    let d = discord(&rho).unwrap();
    c.bench_function("weak_discord/two-qubit", |b| {
        b.iter(|| weak_discord_with(black_box(&rho), &d, 0.25).unwrap())
    });
}

fn dqc1(c: &mut Criterion) {
    let mut group = c.benchmark_group("discord/dqc1");
    group.sample_size(10);
    for n in [1u32, 2, 3] {
        let rho = random_dqc1(n, 11).unwrap();
        group.bench_function(format!("n={n}"), |b| b.iter(|| discord(black_box(&rho)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, two_qubit, dqc1);
criterion_main!(benches);
