#![allow(dead_code)]

use matcyc::{ElementSet, FieldMatrix, Matroid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded random generator matrices over GF(2) and GF(3), alternating the
/// field, with `n` columns drawn from `columns` and up to four rows.
pub fn corpus(seed: u64, count: usize, columns: std::ops::RangeInclusive<usize>) -> Vec<FieldMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let q = if i % 2 == 0 { 2 } else { 3 };
            let n = rng.gen_range(columns.clone());
            let k = rng.gen_range(1..=n.min(4));
            let rows = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
            FieldMatrix::new(q, rows).expect("valid random matrix")
        })
        .collect()
}

pub fn matroids(seed: u64, count: usize, columns: std::ops::RangeInclusive<usize>) -> Vec<Matroid> {
    corpus(seed, count, columns).into_iter().map(Matroid::linear).collect()
}

/// A uniformly random subset of `within`.
pub fn random_subset(rng: &mut impl Rng, within: ElementSet) -> ElementSet {
    within.iter().filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn example_text() -> &'static str {
    "% generator matrix of a binary (6,3,2) code\nq 2\n1 0 1 0 1 1\n0 1 1 0 1 1\n0 0 0 1 1 1\n"
}
