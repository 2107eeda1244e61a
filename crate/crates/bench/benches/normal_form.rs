use std::hint::black_box;

use braidnf_bench::blowup_word;
use braidnf_core::oracle::sampling::random_word;
use braidnf_core::{normal_form, residue, word_to_crossings, Strategy};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bench_normal_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for n in [3usize, 4, 5] {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let words: Vec<_> = (0..64).map(|_| random_word(n, 24, &mut rng)).collect();
        group.bench_with_input(BenchmarkId::new("random24", n), &words, |b, words| {
            b.iter(|| {
                for w in words {
                    black_box(normal_form(w).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn bench_residue(c: &mut Criterion) {
    let mut group = c.benchmark_group("residue");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let seqs: Vec<_> = (0..64).map(|_| word_to_crossings(&random_word(5, 16, &mut rng))).collect();
    for (name, s) in [("leftmost", Strategy::Leftmost), ("rightmost", Strategy::Rightmost)] {
        group.bench_with_input(BenchmarkId::new(name, 5), &seqs, |b, seqs| {
            b.iter(|| {
                for c in seqs {
                    black_box(residue(c, s).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn bench_blowup(c: &mut Criterion) {
    let mut group = c.benchmark_group("blowup");
    group.sample_size(10);
    for p in 1..=4 {
        let w = blowup_word(p);
        group.bench_with_input(BenchmarkId::from_parameter(p), &w, |b, w| b.iter(|| black_box(normal_form(w).unwrap())));
    }
    group.finish();
}

criterion_group!(benches, bench_normal_form, bench_residue, bench_blowup);
criterion_main!(benches);
