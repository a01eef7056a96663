#![allow(dead_code)]

use colondec::{LinearCode, PrimeField};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const PRIMES: [u64; 4] = [2, 3, 5, 7];

/// Random full-rank code over a random small prime field with
/// `q^(k + extra_dim) <= budget`, `n <= max_n`.
pub fn random_code(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    max_k: usize,
    extra_dim: u32,
    budget: u64,
) -> LinearCode {
    loop {
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        let max_k_here = (1..=max_k)
            .take_while(|&k| p.pow(k as u32 + extra_dim) <= budget)
            .last();
        let Some(max_k_here) = max_k_here else {
            continue;
        };
        let k = rng.gen_range(1..=max_k_here);
        let n = rng.gen_range(k..=max_n);
        let f = PrimeField::new(p).unwrap();
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p as u32)).collect())
            .collect();
        if let Ok(c) = LinearCode::from_rows(f, &rows) {
            return c;
        }
    }
}

pub fn random_word(rng: &mut ChaCha8Rng, code: &LinearCode) -> Vec<u32> {
    let p = code.field().modulus();
    (0..code.n()).map(|_| rng.gen_range(0..p)).collect()
}

/// Error of exactly `t` nonzero entries at distinct positions.
pub fn random_error(rng: &mut ChaCha8Rng, code: &LinearCode, t: usize) -> Vec<u32> {
    let p = code.field().modulus();
    let mut e = vec![0u32; code.n()];
    for pos in rand::seq::index::sample(rng, code.n(), t) {
        e[pos] = rng.gen_range(1..p);
    }
    e
}
