//! Algebraic laws as reusable checks, with the strategies that feed them.

use neuralcanon::{
    canonical_full, intersect_primes, minimal_primes, minimal_primes_with, DecompositionStrategy,
    IndexSet, MonomialIdeal, MonomialPrime, Pseudomonomial, SfMonomial,
};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

type Check = Result<(), TestCaseError>;

fn mask(n: usize) -> u64 {
    IndexSet::full(n).bits()
}

/// Any squarefree monomial, Boolean-divisible ones included.
pub fn any_monomial(n: usize) -> impl Strategy<Value = SfMonomial> {
    (any::<u64>(), any::<u64>()).prop_map(move |(x, y)| {
        SfMonomial::new(
            n,
            IndexSet::from_bits(x & mask(n)),
            IndexSet::from_bits(y & mask(n)),
        )
        .unwrap()
    })
}

/// A Boolean-free monomial from a ternary code in `0..3^n`.
pub fn ternary_monomial(n: usize, code: u64) -> SfMonomial {
    let (mut x, mut y) = (IndexSet::EMPTY, IndexSet::EMPTY);
    let mut c = code;
    for i in 1..=n {
        match c % 3 {
            1 => x.insert(i),
            2 => y.insert(i),
            _ => {}
        }
        c /= 3;
    }
    SfMonomial::new(n, x, y).unwrap()
}

pub fn bf_monomial(n: usize) -> impl Strategy<Value = SfMonomial> {
    (0..3u64.pow(n as u32)).prop_map(move |c| ternary_monomial(n, c))
}

pub fn pseudomonomial(n: usize) -> impl Strategy<Value = Pseudomonomial> {
    bf_monomial(n).prop_map(|m| m.depolarize().unwrap())
}

pub fn triple() -> impl Strategy<Value = (SfMonomial, SfMonomial, SfMonomial)> {
    (1usize..=8).prop_flat_map(|n| (any_monomial(n), any_monomial(n), any_monomial(n)))
}

/// Ideals of squarefree monomials (1 excluded), Boolean-divisible
/// generators allowed, `n <= 6`, 1 to 5 generators.
pub fn sf_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=6).prop_flat_map(|n| {
        vec(any_monomial(n).prop_filter("not 1", |m| !m.is_one()), 1..=5)
            .prop_map(move |g| MonomialIdeal::new(n, g).unwrap())
    })
}

/// Boolean-free generator lists (1 excluded), not necessarily reduced.
pub fn bf_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=6).prop_flat_map(|n| {
        vec(
            (1..3u64.pow(n as u32)).prop_map(move |c| ternary_monomial(n, c)),
            1..=5,
        )
        .prop_map(move |g| MonomialIdeal::new(n, g).unwrap())
    })
}

pub fn divisibility_order((a, b, c): (SfMonomial, SfMonomial, SfMonomial)) -> Check {
    prop_assert!(a.divides(&a).unwrap());
    if a.divides(&b).unwrap() && b.divides(&a).unwrap() {
        prop_assert_eq!(a, b);
    }
    if a.divides(&b).unwrap() && b.divides(&c).unwrap() {
        prop_assert!(a.divides(&c).unwrap());
    }
    let expect = a.xsupp().is_subset(b.xsupp()) && a.ysupp().is_subset(b.ysupp());
    prop_assert_eq!(a.divides(&b).unwrap(), expect);
    Ok(())
}

pub fn lcm_laws((a, b, c): (SfMonomial, SfMonomial, SfMonomial)) -> Check {
    let one = SfMonomial::one(a.n()).unwrap();
    let ab = a.lcm(&b).unwrap();
    prop_assert_eq!(ab, b.lcm(&a).unwrap());
    prop_assert_eq!(ab.lcm(&c).unwrap(), a.lcm(&b.lcm(&c).unwrap()).unwrap());
    prop_assert_eq!(a.lcm(&a).unwrap(), a);
    prop_assert_eq!(a.lcm(&one).unwrap(), a);
    prop_assert!(a.divides(&ab).unwrap() && b.divides(&ab).unwrap());
    if a.divides(&c).unwrap() && b.divides(&c).unwrap() {
        prop_assert!(ab.divides(&c).unwrap());
    }
    prop_assert_eq!(a.shared_indices(&b).unwrap(), b.shared_indices(&a).unwrap());
    Ok(())
}

pub fn polarization((p, g): (Pseudomonomial, SfMonomial)) -> Check {
    let q = p.polarize();
    prop_assert!(q.is_boolean_free());
    prop_assert_eq!(q.depolarize().unwrap(), p);
    prop_assert_eq!(g.depolarize().unwrap().polarize(), g);
    Ok(())
}

fn meets(p: &MonomialPrime, g: &SfMonomial) -> bool {
    !p.xvars().intersection(g.xsupp()).is_empty() || !p.yvars().intersection(g.ysupp()).is_empty()
}

fn within(p: &MonomialPrime, q: &MonomialPrime) -> bool {
    p.xvars().is_subset(q.xvars()) && p.yvars().is_subset(q.yvars())
}

pub fn primes_laws(a: MonomialIdeal) -> Check {
    let primes = minimal_primes(&a);
    prop_assert!(!primes.is_empty());
    for (s, p) in primes.iter().enumerate() {
        for g in a.gens() {
            prop_assert!(meets(p, g), "{} misses {}", p, g);
        }
        for (t, q) in primes.iter().enumerate() {
            prop_assert!(s == t || !within(p, q), "{} inside {}", p, q);
        }
    }
    let back = intersect_primes(a.n(), &primes).unwrap();
    prop_assert!(back.same_generators(&a.minimal()), "{} vs {}", back, a);
    let mut reversed = a.gens().to_vec();
    reversed.reverse();
    let reversed = MonomialIdeal::new(a.n(), reversed).unwrap();
    let mut sorted = primes.clone();
    sorted.sort();
    let mut other = minimal_primes(&reversed);
    other.sort();
    prop_assert_eq!(&sorted, &other);
    let mut dual = minimal_primes_with(&a, DecompositionStrategy::Transversal);
    dual.sort();
    prop_assert_eq!(&sorted, &dual);
    Ok(())
}

pub fn idempotence(a: MonomialIdeal) -> Check {
    let c = canonical_full(&a).unwrap().canonical;
    if c.is_unit() {
        return Ok(());
    }
    let again = canonical_full(&c).unwrap();
    prop_assert!(again.was_already_canonical, "{} -> {}", c, again.canonical);
    prop_assert!(again.added.is_empty() && again.removed.is_empty());
    Ok(())
}

pub fn persistence(a: MonomialIdeal) -> Check {
    let c = canonical_full(&a).unwrap().canonical;
    for g in a.gens() {
        prop_assert!(
            c.gens().iter().any(|h| h.divides(g).unwrap()),
            "no divisor of {} in {}",
            g,
            c
        );
    }
    Ok(())
}
