//! Canonical forms of polarized neural ideals.
//!
//! A neural ideal lives in `F_2[x_1..x_n]` and is generated by
//! pseudomonomials `prod x_i prod (1 - x_i)`. Polarizing `(1 - x_i) -> y_i`
//! turns it into a squarefree monomial ideal in `2n` variables, where
//! primary decomposition is combinatorial. The canonical form is recovered by
//! dropping every minimal prime that contains a pair `(x_i, y_i)`,
//! intersecting what remains, and discarding Boolean-divisible and redundant
//! generators.
//!
//! The crate provides:
//!
//! * value types for monomials, pseudomonomials and ideals ([`monomial`]),
//! * minimal primes and prime intersection ([`decomposition`]),
//! * the full and shortcut canonical-form pipelines ([`engine`]),
//! * a pairwise canonicity test and the two-generator classification
//!   ([`canonicity`]),
//! * closed forms for chain, cycle and spread families plus generic
//!   canonical forms over placeholder variables ([`families`]),
//! * a brute-force oracle over binary codes ([`oracle`]),
//! * text parsing ([`text`]).
//!
//! ```
//! use neuralcanon::{canonical_full, text::parse_ideal};
//!
//! let a = parse_ideal("x1*y2, x3*y1", None).unwrap();
//! let c = canonical_full(&a).unwrap();
//! assert_eq!(c.canonical.sorted().to_string(), "(x1*y2, x3*y1, x3*y2)");
//! ```

pub mod canonicity;
pub mod decomposition;
pub mod engine;
mod error;
pub mod families;
pub mod monomial;
pub mod oracle;
mod support;
pub mod text;

pub use canonicity::{
    classify_two_gen, is_canonical, CanonicityVerdict, PreconditionFailure, TwoGenCase, TwoGenTag,
    Witness,
};
pub use decomposition::{
    drop_boolean_primes, intersect_primes, minimal_primes, minimal_primes_with,
    DecompositionStrategy, MonomialPrime,
};
pub use engine::{
    almost_canonical, canonical_fast, canonical_full, recompose, reduce, CanonicalResult,
};
pub use error::{Error, ParseError, Result};
pub use families::{
    chain_canonical, chain_ideal, cycle_canonical, cycle_ideal, expand_repeats, generic_canonical,
    spread_canonical, spread_ideal, substitute, ExtIdeal, ExtMonomial, SpreadOrientation,
    SpreadShape, Substitution,
};
pub use monomial::{Axis, IndexSet, MonomialIdeal, Pseudomonomial, SfMonomial, Var, MAX_N};
pub use oracle::{
    code_of_ideal, evaluate, ideal_of_code, oracle_canonical, BinaryWord, NeuralCode,
    ORACLE_HARD_LIMIT,
};
