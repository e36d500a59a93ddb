mod common;

use common::{ideal, neural_ideal, raw_ideal, rng};
use neuralcanon::{
    canonical_fast, canonical_full, code_of_ideal, evaluate, ideal_of_code, oracle_canonical,
    MonomialIdeal, NeuralCode, SfMonomial,
};
use rand::seq::SliceRandom;
use rand::Rng;

/// The oracle's answer for `a`, with the empty code mapped to `(1)`.
fn oracle_of(a: &MonomialIdeal) -> MonomialIdeal {
    let code = code_of_ideal(a).unwrap();
    if code.is_empty() {
        MonomialIdeal::unit(a.n()).unwrap()
    } else {
        oracle_canonical(&code).unwrap()
    }
}

#[test]
fn engine_matches_oracle_on_reduced_ideals() {
    let mut r = rng(0x6f72_6163);
    for _ in 0..2_000 {
        let a = neural_ideal(&mut r, 6, 5);
        let want = oracle_of(&a);
        let full = canonical_full(&a).unwrap().canonical;
        let fast = canonical_fast(&a).unwrap().canonical;
        assert!(
            full.same_generators(&want),
            "{a}: full {full} oracle {want}"
        );
        assert!(
            fast.same_generators(&want),
            "{a}: fast {fast} oracle {want}"
        );
    }
}

#[test]
fn engine_matches_oracle_on_unreduced_draws() {
    let mut r = rng(17);
    for _ in 0..1_000 {
        let n = r.gen_range(1..=7);
        let count = r.gen_range(1..=7);
        let a = raw_ideal(&mut r, n, count);
        let want = oracle_of(&a);
        assert!(
            canonical_full(&a).unwrap().canonical.same_generators(&want),
            "{a}"
        );
        assert!(
            canonical_fast(&a).unwrap().canonical.same_generators(&want),
            "{a}"
        );
    }
}

#[test]
fn engine_matches_oracle_on_code_ideals() {
    // Start from a code, take the indicator generators, reduce and shuffle.
    let mut r = rng(99);
    for _ in 0..300 {
        let n = r.gen_range(1..=5);
        let words: Vec<u64> = (0..1u64 << n).filter(|_| r.gen_bool(0.4)).collect();
        let code = NeuralCode::new(n, words).unwrap();
        if code.is_empty() || code.len() == 1 << n {
            continue;
        }
        let mut gens = ideal_of_code(&code).unwrap().minimal().into_gens();
        gens.shuffle(&mut r);
        let a = MonomialIdeal::new(n, gens).unwrap();
        let want = oracle_canonical(&code).unwrap();
        assert!(
            canonical_full(&a).unwrap().canonical.same_generators(&want),
            "{code}"
        );
        assert!(
            canonical_fast(&a).unwrap().canonical.same_generators(&want),
            "{code}"
        );
    }
}

#[test]
fn code_round_trip_exhaustive_small() {
    for n in 1..=3usize {
        let words = 1u64 << n;
        for set in 0..1u64 << words {
            let code = NeuralCode::new(n, (0..words).filter(|w| set & (1 << w) != 0)).unwrap();
            assert_eq!(code_of_ideal(&ideal_of_code(&code).unwrap()).unwrap(), code);
        }
    }
}

#[test]
fn code_round_trip_random() {
    let mut r = rng(4);
    for _ in 0..400 {
        let n = r.gen_range(4..=8);
        let p = r.gen_range(0.05..0.95);
        let code = NeuralCode::new(n, (0..1u64 << n).filter(|_| r.gen_bool(p))).unwrap();
        assert_eq!(code_of_ideal(&ideal_of_code(&code).unwrap()).unwrap(), code);
    }
}

#[test]
fn canonical_generators_vanish_on_the_code() {
    let mut r = rng(5);
    for _ in 0..500 {
        let a = neural_ideal(&mut r, 6, 5);
        let code = code_of_ideal(&a).unwrap();
        let c = canonical_full(&a).unwrap().canonical;
        for g in c.gens() {
            let f = g.depolarize().unwrap();
            for w in code.iter() {
                assert!(!evaluate(&f, &w).unwrap(), "{g} is nonzero at {w}");
            }
        }
        // Depolarized presentation describes the same code.
        assert_eq!(code_of_ideal(&c).unwrap(), code);
    }
}

#[test]
fn oracle_output_is_an_antichain() {
    let mut r = rng(6);
    for _ in 0..300 {
        let n = r.gen_range(1..=6);
        let code = NeuralCode::new(n, (0..1u64 << n).filter(|_| r.gen_bool(0.5))).unwrap();
        if code.is_empty() {
            continue;
        }
        let c = oracle_canonical(&code).unwrap();
        for (s, g) in c.gens().iter().enumerate() {
            assert!(g.is_boolean_free());
            for (t, h) in c.gens().iter().enumerate() {
                assert!(s == t || !g.divides(h).unwrap(), "{g} divides {h}");
            }
        }
        assert_eq!(code_of_ideal(&c).unwrap(), code);
    }
}

#[test]
fn depolarized_example() {
    let a = ideal("x1, x2*y1");
    let c = canonical_full(&a).unwrap().canonical;
    let shown: Vec<String> = c
        .gens()
        .iter()
        .map(|g| g.depolarize().unwrap().to_string())
        .collect();
    assert_eq!(shown, ["x1", "x2"]);
    let y = SfMonomial::from_indices(6, &[], &[3, 6]).unwrap();
    assert_eq!(y.depolarize().unwrap().to_string(), "(1-x3)*(1-x6)");
}
