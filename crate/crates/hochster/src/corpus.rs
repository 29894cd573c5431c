//! Seeded random ideals.
//!
//! Parameters are fixed so a seed names the same corpus everywhere:
//! ChaCha8 seeded with `seed_from_u64`, then per ideal `n` uniform in
//! `1..=max_n`, generator count uniform in `1..=5`, and each exponent
//! uniform in `0..=max_exp`. An all-zero generator is redrawn.

use hochster_core::{Monomial, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_GENERATORS: usize = 5;

fn draw(rng: &mut ChaCha8Rng, max_n: usize, max_exp: u32) -> MonomialIdeal {
    let n = rng.random_range(1..=max_n);
    let count = rng.random_range(1..=MAX_GENERATORS);
    let gens = (0..count)
        .map(|_| loop {
            let e: Vec<u32> = (0..n).map(|_| rng.random_range(0..=max_exp)).collect();
            if e.iter().any(|&x| x > 0) {
                break Monomial::new(e).expect("n ≤ max_n ≤ 64");
            }
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("no generator is 1")
}

/// `n ≤ 4`, exponents `≤ 3`.
pub fn random_ideals(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| draw(&mut rng, 4, 3)).collect()
}

/// Square-free, `n ≤ 6`.
pub fn random_squarefree_ideals(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| draw(&mut rng, 6, 1)).collect()
}
