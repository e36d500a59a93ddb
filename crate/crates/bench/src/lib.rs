//! Seeded workloads shared by the benchmarks.

use neuralcanon::{IndexSet, MonomialIdeal, SfMonomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A Boolean-free monomial of width `n` in which each index appears with
/// probability `density`, on a random side. Never the constant 1.
pub fn monomial(r: &mut impl Rng, n: usize, density: f64) -> SfMonomial {
    loop {
        let (mut x, mut y) = (IndexSet::EMPTY, IndexSet::EMPTY);
        for i in 1..=n {
            if r.gen_bool(density) {
                if r.gen_bool(0.5) {
                    x.insert(i)
                } else {
                    y.insert(i)
                }
            }
        }
        if !(x.is_empty() && y.is_empty()) {
            return SfMonomial::new(n, x, y).expect("disjoint supports");
        }
    }
}

/// A reduced ideal drawn from `count` random monomials of width `n`.
pub fn ideal(r: &mut impl Rng, n: usize, count: usize, density: f64) -> MonomialIdeal {
    let gens = (0..count).map(|_| monomial(r, n, density)).collect();
    MonomialIdeal::new(n, gens)
        .expect("uniform width")
        .minimal()
}

/// A fixed batch of ideals for one benchmark point.
pub fn batch(seed: u64, n: usize, count: usize, size: usize) -> Vec<MonomialIdeal> {
    let mut r = rng(seed);
    let density = (3.0 / n as f64).min(0.6);
    (0..size)
        .map(|_| ideal(&mut r, n, count, density))
        .collect()
}
