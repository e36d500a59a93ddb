//! Deciding canonicity from generator pairs, and the closed forms of all
//! two-generator ideals.
//!
//! Generator positions in verdicts and errors are 1-based, matching the
//! order of the input list.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, SfMonomial};
use crate::support::Support;

/// A pair of generators sharing only `index`, with no other generator
/// dividing `lcm / (x_index * y_index)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub first: usize,
    pub second: usize,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreconditionFailure {
    /// The input contains the constant 1.
    UnitIdeal,
    /// Generator `generator` is divisible by `x_index * y_index`.
    BooleanDivisible { generator: usize, index: usize },
    /// Generator `divisor` divides generator `multiple` (duplicates included).
    DivisorPair { divisor: usize, multiple: usize },
}

impl fmt::Display for PreconditionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PreconditionFailure::UnitIdeal => f.write_str("the ideal contains 1"),
            PreconditionFailure::BooleanDivisible { generator, index } => {
                write!(f, "generator {generator} is divisible by x{index}*y{index}")
            }
            PreconditionFailure::DivisorPair { divisor, multiple } => {
                write!(f, "generator {divisor} divides generator {multiple}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicityVerdict {
    pub canonical: bool,
    pub witness: Option<Witness>,
    pub precondition_failure: Option<PreconditionFailure>,
}

fn check_preconditions(gens: &[Support]) -> Option<PreconditionFailure> {
    if gens.iter().any(|g| g.is_one()) {
        return Some(PreconditionFailure::UnitIdeal);
    }
    for (j, g) in gens.iter().enumerate() {
        if !g.is_boolean_free() {
            return Some(PreconditionFailure::BooleanDivisible {
                generator: j + 1,
                index: g.pairs().trailing_zeros() as usize + 1,
            });
        }
    }
    for (j, g) in gens.iter().enumerate() {
        for (l, h) in gens.iter().enumerate() {
            if j != l && g.divides(*h) {
                return Some(PreconditionFailure::DivisorPair {
                    divisor: j + 1,
                    multiple: l + 1,
                });
            }
        }
    }
    None
}

/// Decides canonicity of a divisor-free, Boolean-free generator list.
///
/// The ideal fails to be canonical exactly when some pair shares a single
/// index `i` and no other generator divides `lcm / (x_i y_i)`. The reported
/// witness is the first such `(first, second, index)` in lexicographic
/// order. Inputs outside those hypotheses are answered with
/// `canonical = false` and the failed precondition.
///
/// ```
/// use neuralcanon::{is_canonical, text::parse_ideal};
/// assert!(is_canonical(&parse_ideal("x1*x2, x3*x4*y1, x2*x3", None).unwrap()).canonical);
/// let v = is_canonical(&parse_ideal("x1*y2, x3*y1", None).unwrap());
/// assert_eq!(v.witness.map(|w| (w.first, w.second, w.index)), Some((1, 2, 1)));
/// ```
pub fn is_canonical(a: &MonomialIdeal) -> CanonicityVerdict {
    let gens = a.supports();
    if let Some(reason) = check_preconditions(&gens) {
        return CanonicityVerdict {
            canonical: false,
            witness: None,
            precondition_failure: Some(reason),
        };
    }
    for j in 0..gens.len() {
        for l in j + 1..gens.len() {
            let s = gens[j].shared(gens[l]);
            if s.count_ones() != 1 {
                continue;
            }
            let m = gens[j].union(gens[l]).without(Support::new(s, s, 0));
            let covered = gens
                .iter()
                .enumerate()
                .any(|(t, g)| t != j && t != l && g.divides(m));
            if !covered {
                return CanonicityVerdict {
                    canonical: false,
                    witness: Some(Witness {
                        first: j + 1,
                        second: l + 1,
                        index: s.trailing_zeros() as usize + 1,
                    }),
                    precondition_failure: None,
                };
            }
        }
    }
    CanonicityVerdict {
        canonical: true,
        witness: None,
        precondition_failure: None,
    }
}

/// The cases of the two-generator classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoGenTag {
    /// No shared index: already canonical.
    NoShared,
    /// Two or more shared indices, all with `x` on the same generator.
    MultiSharedSameSide,
    /// Two or more shared indices with `x` on both generators.
    MultiSharedMixed,
    /// One shared index `i`; writing the generators `x_i h_p`, `y_i h_q`
    /// and `L = lcm(h_p, h_q)`: `L` differs from both, giving
    /// `(x_i h_p, y_i h_q, L)`.
    OneShared4a,
    /// `h_p` properly divides `h_q`: `(x_i h_p, h_q)`.
    OneShared4b,
    /// `h_q` properly divides `h_p`: `(h_p, y_i h_q)`.
    OneShared4c,
    /// `h_p = h_q`: `(h_p)`.
    OneShared4d,
}

impl TwoGenTag {
    pub fn name(self) -> &'static str {
        match self {
            TwoGenTag::NoShared => "NO_SHARED",
            TwoGenTag::MultiSharedSameSide => "MULTI_SHARED_SAME_SIDE",
            TwoGenTag::MultiSharedMixed => "MULTI_SHARED_MIXED",
            TwoGenTag::OneShared4a => "ONE_SHARED_4a",
            TwoGenTag::OneShared4b => "ONE_SHARED_4b",
            TwoGenTag::OneShared4c => "ONE_SHARED_4c",
            TwoGenTag::OneShared4d => "ONE_SHARED_4d",
        }
    }

    /// The case number as printed in the classification: `1`, `2`, `3`,
    /// `4a` .. `4d`.
    pub fn case_label(self) -> &'static str {
        match self {
            TwoGenTag::NoShared => "1",
            TwoGenTag::MultiSharedSameSide => "2",
            TwoGenTag::MultiSharedMixed => "3",
            TwoGenTag::OneShared4a => "4a",
            TwoGenTag::OneShared4b => "4b",
            TwoGenTag::OneShared4c => "4c",
            TwoGenTag::OneShared4d => "4d",
        }
    }
}

impl fmt::Display for TwoGenTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGenCase {
    pub tag: TwoGenTag,
    /// Generators in display order.
    pub canonical_form: MonomialIdeal,
}

/// Classifies a two-generator polarized neural ideal and returns its
/// canonical form in closed form.
///
/// ```
/// use neuralcanon::{classify_two_gen, TwoGenTag, text::parse_ideal};
/// let c = classify_two_gen(&parse_ideal("x1*y2, x3*y1", None).unwrap()).unwrap();
/// assert_eq!(c.tag, TwoGenTag::OneShared4a);
/// assert_eq!(c.canonical_form.to_string(), "(x1*y2, x3*y1, x3*y2)");
/// ```
pub fn classify_two_gen(a: &MonomialIdeal) -> Result<TwoGenCase> {
    let gens = a.supports();
    if gens.len() != 2 {
        return Err(Error::GeneratorCount {
            expected: 2,
            found: gens.len(),
        });
    }
    match check_preconditions(&gens) {
        Some(PreconditionFailure::BooleanDivisible { index, .. }) => {
            return Err(Error::BooleanDivisible { index })
        }
        Some(PreconditionFailure::DivisorPair { divisor, multiple }) => {
            return Err(Error::DivisorPair { divisor, multiple })
        }
        // A generator 1 divides the other one.
        Some(PreconditionFailure::UnitIdeal) => {
            let divisor = if gens[0].is_one() { 1 } else { 2 };
            return Err(Error::DivisorPair {
                divisor,
                multiple: 3 - divisor,
            });
        }
        None => {}
    }
    let (g1, g2) = (gens[0], gens[1]);
    let s = g1.shared(g2);
    let (tag, form) = match s.count_ones() {
        0 => (TwoGenTag::NoShared, vec![g1, g2]),
        1 => {
            let (p, q) = if g1.x & s != 0 { (g1, g2) } else { (g2, g1) };
            let pair = Support::new(s, s, 0);
            let (hp, hq) = (p.without(pair), q.without(pair));
            let l = hp.union(hq);
            if hp == hq {
                (TwoGenTag::OneShared4d, vec![hp])
            } else if l == hq {
                (TwoGenTag::OneShared4b, vec![p, hq])
            } else if l == hp {
                (TwoGenTag::OneShared4c, vec![hp, q])
            } else {
                (TwoGenTag::OneShared4a, vec![p, q, l])
            }
        }
        _ => {
            let same_side = s & !(g1.x & g2.y) == 0 || s & !(g1.y & g2.x) == 0;
            let tag = if same_side {
                TwoGenTag::MultiSharedSameSide
            } else {
                TwoGenTag::MultiSharedMixed
            };
            (tag, vec![g1, g2])
        }
    };
    let mut form = form;
    form.sort_by(Support::display_cmp);
    Ok(TwoGenCase {
        tag,
        canonical_form: MonomialIdeal::from_supports(a.n(), &form),
    })
}

/// The pair of generators named by a witness, for reporting.
pub fn witness_generators(a: &MonomialIdeal, w: &Witness) -> Option<(SfMonomial, SfMonomial)> {
    let g = a.gens();
    Some((
        *g.get(w.first.checked_sub(1)?)?,
        *g.get(w.second.checked_sub(1)?)?,
    ))
}
