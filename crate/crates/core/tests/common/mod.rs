#![allow(dead_code)]

pub mod laws;

use neuralcanon::text::{parse_ideal, parse_monomial};
use neuralcanon::{
    ExtIdeal, ExtMonomial, IndexSet, MonomialIdeal, SfMonomial, SpreadOrientation, SpreadShape,
    Substitution,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn ideal(text: &str) -> MonomialIdeal {
    parse_ideal(text, None).unwrap()
}

pub fn ideal_n(text: &str, n: usize) -> MonomialIdeal {
    parse_ideal(text, Some(n)).unwrap()
}

pub fn mono(text: &str, n: usize) -> SfMonomial {
    parse_monomial(text, n).unwrap()
}

pub fn monos(n: usize, items: &[&str]) -> Vec<SfMonomial> {
    items.iter().map(|s| mono(s, n)).collect()
}

/// A Boolean-free monomial other than 1: each index is absent, `x` or `y`.
pub fn bf_monomial(rng: &mut impl Rng, n: usize, density: f64) -> SfMonomial {
    loop {
        let (mut x, mut y) = (IndexSet::EMPTY, IndexSet::EMPTY);
        for i in 1..=n {
            if rng.gen_bool(density) {
                if rng.gen_bool(0.5) {
                    x.insert(i);
                } else {
                    y.insert(i);
                }
            }
        }
        let m = SfMonomial::new(n, x, y).unwrap();
        if !m.is_one() {
            return m;
        }
    }
}

/// Up to `count` Boolean-free generators, not reduced.
pub fn raw_ideal(rng: &mut impl Rng, n: usize, count: usize) -> MonomialIdeal {
    let density = rng.gen_range(0.25..0.7);
    let gens = (0..count).map(|_| bf_monomial(rng, n, density)).collect();
    MonomialIdeal::new(n, gens).unwrap()
}

/// A polarized neural ideal: Boolean-free and divisor-reduced, 1 to
/// `max_gens` generators, width drawn from `1..=max_n`.
pub fn neural_ideal(rng: &mut impl Rng, max_n: usize, max_gens: usize) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_n);
    let count = rng.gen_range(1..=max_gens);
    raw_ideal(rng, n, count).minimal()
}

/// Every Boolean-free monomial of width `n` other than 1.
pub fn all_bf_monomials(n: usize) -> Vec<SfMonomial> {
    let mut out = Vec::new();
    let mut digits = vec![0u8; n];
    loop {
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out;
            }
            digits[i] = (digits[i] + 1) % 3;
            if digits[i] != 0 {
                break;
            }
            i += 1;
        }
        let (mut x, mut y) = (IndexSet::EMPTY, IndexSet::EMPTY);
        for (t, d) in digits.iter().enumerate() {
            match d {
                1 => x.insert(t + 1),
                2 => y.insert(t + 1),
                _ => {}
            }
        }
        out.push(SfMonomial::new(n, x, y).unwrap());
    }
}

/// Every antichain of at most `max_gens` monomials from `pool`.
pub fn antichains(pool: &[SfMonomial], max_gens: usize) -> Vec<Vec<SfMonomial>> {
    fn go(
        pool: &[SfMonomial],
        start: usize,
        max: usize,
        cur: &mut Vec<SfMonomial>,
        out: &mut Vec<Vec<SfMonomial>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for t in start..pool.len() {
            let m = pool[t];
            let ok = cur
                .iter()
                .all(|g| !g.divides(&m).unwrap() && !m.divides(g).unwrap());
            if ok {
                cur.push(m);
                go(pool, t + 1, max, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(pool, 0, max_gens, &mut Vec::new(), &mut out);
    out
}

/// `count` monomials over indices `reserved+1..=n`, pairwise sharing no
/// index: each free index gets one fixed side. Some may be 1 and some may
/// coincide, which exercises the degenerate LCM collisions.
pub fn free_monomials(
    rng: &mut impl Rng,
    reserved: usize,
    n: usize,
    count: usize,
) -> Vec<SfMonomial> {
    let sides: Vec<bool> = (0..=n).map(|_| rng.gen_bool(0.7)).collect();
    let density = rng.gen_range(0.2..0.6);
    (0..count)
        .map(|_| {
            let (mut x, mut y) = (IndexSet::EMPTY, IndexSet::EMPTY);
            for (i, &side) in sides.iter().enumerate().skip(reserved + 1) {
                if rng.gen_bool(density) {
                    if side {
                        x.insert(i);
                    } else {
                        y.insert(i);
                    }
                }
            }
            SfMonomial::new(n, x, y).unwrap()
        })
        .collect()
}

/// A random partition of `1..=k` into blocks (shuffled membership, blocks
/// listed by smallest element), with a random orientation.
pub fn spread_shape(rng: &mut impl Rng, k: usize) -> SpreadShape {
    let mut idx: Vec<usize> = (1..=k).collect();
    idx.shuffle(rng);
    let parts = rng.gen_range(1..=k);
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); parts];
    for (t, &i) in idx.iter().enumerate() {
        let b = if t < parts {
            t
        } else {
            rng.gen_range(0..parts)
        };
        blocks[b].push(i);
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    let orientation = if rng.gen_bool(0.5) {
        SpreadOrientation::Standard
    } else {
        SpreadOrientation::Reversed
    };
    SpreadShape::new(blocks, orientation).unwrap()
}

/// A random extended ideal over `n` base indices and `k` placeholders,
/// together with a valid substitution whose images are never 1.
///
/// Each index gets a role: paired (may appear as `x` in some generators and
/// `y` in others), or one-sided. Images only use one-sided indices on their
/// own side, so they never introduce a shared index.
pub fn generic_instance(
    rng: &mut impl Rng,
    n: usize,
    k: usize,
    gens: usize,
) -> (ExtIdeal, Substitution) {
    // 0: base only, may pair; 1: x only; 2: y only.
    let mut roles: Vec<u8> = (0..=n).map(|_| rng.gen_range(0..3)).collect();
    if roles[1..].iter().all(|&r| r == 0) {
        roles[n] = 1;
    }
    let one_sided: Vec<usize> = (1..=n).filter(|&i| roles[i] != 0).collect();
    let side_var = |i: usize, x: &mut IndexSet, y: &mut IndexSet| {
        if roles[i] == 1 {
            x.insert(i)
        } else {
            y.insert(i)
        }
    };
    let mut list = Vec::with_capacity(gens);
    for _ in 0..gens {
        let (mut x, mut y) = (IndexSet::EMPTY, IndexSet::EMPTY);
        for (i, &role) in roles.iter().enumerate().skip(1) {
            if !rng.gen_bool(0.35) {
                continue;
            }
            match role {
                0 => {
                    if rng.gen_bool(0.5) {
                        x.insert(i)
                    } else {
                        y.insert(i)
                    }
                }
                _ => side_var(i, &mut x, &mut y),
            }
        }
        let mut z = IndexSet::EMPTY;
        for j in 1..=k {
            if rng.gen_bool(0.5) {
                z.insert(j);
            }
        }
        let base = SfMonomial::new(n, x, y).unwrap();
        if base.is_one() && z.is_empty() {
            z.insert(rng.gen_range(1..=k));
        }
        list.push(ExtMonomial::new(base, z, k).unwrap());
    }
    let images = (0..k)
        .map(|_| {
            let (mut x, mut y) = (IndexSet::EMPTY, IndexSet::EMPTY);
            let first = one_sided[rng.gen_range(0..one_sided.len())];
            side_var(first, &mut x, &mut y);
            for &i in &one_sided {
                if rng.gen_bool(0.3) {
                    side_var(i, &mut x, &mut y);
                }
            }
            SfMonomial::new(n, x, y).unwrap()
        })
        .collect();
    (
        ExtIdeal::new(n, k, list).unwrap(),
        Substitution::new(images),
    )
}
