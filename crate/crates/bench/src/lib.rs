//! Fixtures for the solver benchmarks.

use rand::Rng;
use zed_core::generate::{random_cnf, random_set_pair, rng_from_seed, SetGenParams};
use zed_core::sat::{reduce_3sat_to_seq_zed, reduce_3sat_to_set_zed};
use zed_core::{SeqGenome, SetGenome, SignedGene};

/// Two random signed sequences over `families` families.
pub fn seq_pair(seed: u64, len: usize, families: u32) -> (SeqGenome, SeqGenome) {
    let mut rng = rng_from_seed(seed);
    let mut one = || -> SeqGenome {
        (0..len)
            .map(|_| {
                let v = i64::from(rng.random_range(1..=families));
                SignedGene::from_signed(if rng.random_bool(0.5) { v } else { -v }).unwrap()
            })
            .collect()
    };
    (one(), one())
}

/// Planted set instance; `special` keeps every family unique on one side.
pub fn set_pair(seed: u64, ground: u32, k: usize, special: bool) -> (SetGenome, SetGenome) {
    let mut rng = rng_from_seed(seed);
    let params = SetGenParams {
        ground,
        k1: k,
        k2: k,
        max_copies: 3,
        special,
        planted: true,
    };
    random_set_pair(&mut rng, &params)
}

/// Sequence instance compiled from a random formula with distinct variables
/// per clause.
pub fn reduced_seq(seed: u64, n: u32, m: usize) -> (SeqGenome, SeqGenome) {
    let mut rng = rng_from_seed(seed);
    let red = reduce_3sat_to_seq_zed(&random_cnf(&mut rng, n, m, true));
    (red.g1, red.g2)
}

pub fn reduced_set(seed: u64, n: u32, m: usize) -> (SetGenome, SetGenome) {
    let mut rng = rng_from_seed(seed);
    let red = reduce_3sat_to_set_zed(&random_cnf(&mut rng, n, m, true)).unwrap();
    (red.g1, red.g2)
}
