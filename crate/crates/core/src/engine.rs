//! Canonical forms of polarized neural ideals.
//!
//! [`canonical_full`] runs the decomposition route literally: minimal primes,
//! drop every prime containing a pair `(x_i, y_i)`, intersect, strip
//! Boolean-divisible generators, remove multiples. [`canonical_fast`] never
//! decomposes: for each index `i` shared by some pair of generators and by
//! nothing else between them, it appends `lcm(g, h) / (x_i y_i)` for every
//! such pair. The two routes are independent and are cross-checked in tests.

use crate::decomposition::{intersect_supports, primes_of, DecompositionStrategy};
use crate::error::{Error, Result};
use crate::monomial::{IndexSet, MonomialIdeal, SfMonomial};
use crate::support::{minimalize, Support};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalResult {
    /// The canonical form, generators in display order.
    pub canonical: MonomialIdeal,
    /// Whether `canonical` equals the input as a generator set.
    pub was_already_canonical: bool,
    /// Indices recomposed: for the full route, the pairs found in dropped
    /// primes; for the shortcut, the indices shared alone by some pair.
    pub indices_processed: IndexSet,
    /// Generators of `canonical` absent from the input.
    pub added: Vec<SfMonomial>,
    /// Input generators absent from `canonical`.
    pub removed: Vec<SfMonomial>,
}

impl CanonicalResult {
    fn new(input: &MonomialIdeal, canonical: MonomialIdeal, indices_processed: IndexSet) -> Self {
        CanonicalResult {
            was_already_canonical: canonical.same_generators(input),
            added: canonical.difference(input),
            removed: input.difference(&canonical),
            indices_processed,
            canonical,
        }
    }
}

/// Drops Boolean-divisible generators, duplicates and strict multiples,
/// keeping the surviving generators in input order.
///
/// ```
/// use neuralcanon::{reduce, text::parse_ideal};
/// let a = parse_ideal("x1*x2, x1*y1*x3, y1*x3", None).unwrap();
/// assert_eq!(reduce(&a).to_string(), "(x1*x2, x3*y1)");
/// ```
pub fn reduce(a: &MonomialIdeal) -> MonomialIdeal {
    let s = a.supports();
    let kept = reduce_stable(&s);
    MonomialIdeal::from_supports(a.n(), &kept)
}

fn reduce_stable(gens: &[Support]) -> Vec<Support> {
    let clean: Vec<Support> = gens
        .iter()
        .copied()
        .filter(|g| g.is_boolean_free())
        .collect();
    let mut kept: Vec<Support> = Vec::with_capacity(clean.len());
    for (i, &g) in clean.iter().enumerate() {
        let dominated = clean
            .iter()
            .enumerate()
            .any(|(j, &h)| j != i && h.divides(g) && (h != g || j < i));
        if !dominated {
            kept.push(g);
        }
    }
    kept
}

/// Strips Boolean-divisible generators and minimalizes, in display order.
pub(crate) fn finish(mut gens: Vec<Support>) -> Vec<Support> {
    gens.retain(|g| g.is_boolean_free());
    minimalize(&mut gens);
    gens
}

/// Recomposition of the ideal generated by `gens` with respect to the
/// indices in `mask`: decompose, drop pair primes, intersect. Also returns
/// the pair indices of the dropped primes.
pub(crate) fn recompose_supports(gens: &[Support], mask: u64) -> (Vec<Support>, u64) {
    let primes = primes_of(gens, DecompositionStrategy::Splitting);
    let mut dropped = 0u64;
    let kept: Vec<Support> = primes
        .into_iter()
        .filter(|p| {
            let hit = p.pairs() & mask;
            dropped |= p.pairs() & mask;
            hit == 0
        })
        .collect();
    (intersect_supports(&kept), dropped)
}

/// Intersects the minimal primes of `a` that contain no pair `(x_i, y_i)`
/// with `i` in `indices`. The result is minimally generated, in display
/// order; a generator 1 short-circuits to the unit ideal.
pub fn recompose(a: &MonomialIdeal, indices: IndexSet) -> MonomialIdeal {
    let (gens, _) = recompose_supports(&a.supports(), indices.bits());
    MonomialIdeal::from_supports(a.n(), &gens)
}

/// The canonical form by decomposition.
///
/// Boolean-divisible input generators are stripped first. If every minimal
/// prime contains a pair, the result is the unit ideal `(1)`: the code of
/// such an ideal is empty.
///
/// ```
/// use neuralcanon::{canonical_full, text::parse_ideal};
/// let a = parse_ideal("x1, x3*y1", None).unwrap();
/// assert_eq!(canonical_full(&a).unwrap().canonical.to_string(), "(x1, x3)");
/// ```
pub fn canonical_full(a: &MonomialIdeal) -> Result<CanonicalResult> {
    if a.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let gens: Vec<Support> = a
        .supports()
        .into_iter()
        .filter(|g| g.is_boolean_free())
        .collect();
    let full = IndexSet::full(a.n()).bits();
    let (recomposed, dropped) = recompose_supports(&gens, full);
    let canonical = MonomialIdeal::from_supports(a.n(), &finish(recomposed));
    Ok(CanonicalResult::new(
        a,
        canonical,
        IndexSet::from_bits(dropped),
    ))
}

/// Indices `i` such that some pair of generators shares exactly `{i}`.
fn singly_shared(gens: &[Support]) -> u64 {
    let mut out = 0u64;
    for (j, g) in gens.iter().enumerate() {
        for h in &gens[j + 1..] {
            let s = g.shared(*h);
            if s.count_ones() == 1 {
                out |= s;
            }
        }
    }
    out
}

/// Appends `lcm(g, h) / (x_i y_i)` for every pair `g, h` whose shared index
/// set is exactly `{i}` (`bit` is the mask of `i`).
fn expand_index(gens: &mut Vec<Support>, bit: u64) {
    let len = gens.len();
    let strip = Support::new(bit, bit, 0);
    for j in 0..len {
        if (gens[j].x | gens[j].y) & bit == 0 {
            continue;
        }
        for l in j + 1..len {
            if gens[j].shared(gens[l]) == bit {
                let m = gens[j].union(gens[l]).without(strip);
                if !gens.contains(&m) {
                    gens.push(m);
                }
            }
        }
    }
}

/// The canonical form without decomposition.
///
/// After reducing the input, list the indices `i` for which some pair of
/// generators shares only `i`. In ascending order, for each such `i`, append
/// `lcm(g, h) / (x_i y_i)` for each pair sharing only `i`, scanning the
/// current (grown) list, and reduce. Pairs sharing two or more indices add
/// only Boolean-divisible generators and are skipped.
///
/// ```
/// use neuralcanon::{canonical_fast, text::parse_ideal};
/// let a = parse_ideal("x1*y3, x2*y1, x3*y2", None).unwrap();
/// assert_eq!(canonical_fast(&a).unwrap().canonical.len(), 6);
/// ```
pub fn canonical_fast(a: &MonomialIdeal) -> Result<CanonicalResult> {
    if a.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut gens = reduce_stable(&a.supports());
    let indices = singly_shared(&gens);
    let mut rest = indices;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        expand_index(&mut gens, bit);
        gens = reduce_stable(&gens);
    }
    let canonical = MonomialIdeal::from_supports(a.n(), &finish(gens));
    Ok(CanonicalResult::new(
        a,
        canonical,
        IndexSet::from_bits(indices),
    ))
}

/// An almost canonical form: the recomposed ideal with Boolean-divisible
/// generators removed but redundant multiples kept.
///
/// Recomposed generator lists are not unique, so this returns the list built
/// by the one-index expansion used in [`canonical_fast`], without pruning
/// multiples. [`reduce`] of the result is the canonical form.
///
/// ```
/// use neuralcanon::{almost_canonical, text::parse_ideal};
/// let a = parse_ideal("x1*x2, x3*x4*y1, x2*x3", None).unwrap();
/// assert_eq!(almost_canonical(&a).unwrap().to_string(), "(x1*x2, x2*x3, x2*x3*x4, x3*x4*y1)");
/// ```
pub fn almost_canonical(a: &MonomialIdeal) -> Result<MonomialIdeal> {
    if a.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut gens: Vec<Support> = Vec::new();
    for g in a.supports() {
        if g.is_boolean_free() && !gens.contains(&g) {
            gens.push(g);
        }
    }
    let mut rest = singly_shared(&gens);
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        expand_index(&mut gens, bit);
    }
    gens.retain(|g| g.is_boolean_free());
    gens.sort_by(Support::display_cmp);
    Ok(MonomialIdeal::from_supports(a.n(), &gens))
}
