use abacus_bench::{coprime_pairs, multipartitions, partitions_up_to};
use abacus_core::{
    block_partition, e_core, generic_degree, mod_cyclotomic, uglov, upsilon, verify_mainthm1,
    ChargedMultiPartition, ChargedPartition, MultiCharge, Partition,
};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn cores(c: &mut Criterion) {
    let parts = partitions_up_to(12);
    c.bench_function("e_core n<=12 e=3", |b| {
        b.iter(|| {
            for p in &parts {
                black_box(e_core(p, 3).unwrap());
            }
        })
    });
    c.bench_function("upsilon n<=12 e=4", |b| {
        b.iter(|| {
            for p in &parts {
                black_box(upsilon(&ChargedPartition::new(p.clone(), 2), 4).unwrap());
            }
        })
    });
}

fn level_rank(c: &mut Criterion) {
    let inputs: Vec<ChargedMultiPartition> = multipartitions(3, 5)
        .into_iter()
        .map(|mp| ChargedMultiPartition::new(mp, MultiCharge(vec![1, -2, 0])).unwrap())
        .collect();
    c.bench_function("uglov e=3 a=5 to m=5", |b| {
        b.iter(|| {
            for cmp in &inputs {
                black_box(uglov(cmp, 5).unwrap());
            }
        })
    });
}

fn degrees(c: &mut Criterion) {
    let parts = Partition::all_of_size(10);
    c.bench_function("generic_degree mod Phi_4, n=10", |b| {
        b.iter(|| {
            for p in &parts {
                black_box(mod_cyclotomic(&generic_degree(p).unwrap(), 4).unwrap());
            }
        })
    });
}

fn blocks(c: &mut Criterion) {
    let core = Partition::empty();
    c.bench_function("block_partition e=2 a=6 m=3", |b| {
        b.iter(|| black_box(block_partition(2, 6, &core, 3).unwrap()))
    });
    let pairs = coprime_pairs(5);
    c.bench_function("verify_mainthm1 n=8 coprime pairs <= 5", |b| {
        b.iter(|| {
            for &(e, m) in &pairs {
                black_box(verify_mainthm1(8, e, m).unwrap());
            }
        })
    });
}

criterion_group!(benches, cores, level_rank, degrees, blocks);
criterion_main!(benches);
