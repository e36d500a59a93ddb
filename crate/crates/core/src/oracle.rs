//! Ground truth by exhaustive evaluation over binary codes.
//!
//! The canonical form of the neural ideal of a code `C` is the set of
//! divisibility-minimal pseudomonomials vanishing on every codeword. This
//! module computes it by enumerating all `3^n` pseudomonomials, so it is
//! independent of every algebraic shortcut used elsewhere in the crate.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{IndexSet, MonomialIdeal, Pseudomonomial, SfMonomial, MAX_N};

/// Largest width the oracle accepts: it enumerates `3^n` candidates.
pub const ORACLE_HARD_LIMIT: usize = 16;

fn oracle_width(n: usize) -> Result<()> {
    if n > ORACLE_HARD_LIMIT {
        Err(Error::OracleLimit {
            n,
            limit: ORACLE_HARD_LIMIT,
        })
    } else {
        Ok(())
    }
}

fn mask(n: usize) -> u64 {
    IndexSet::full(n).bits()
}

/// A length-`n` binary word; bit `i - 1` is neuron `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    n: usize,
    bits: u64,
}

impl BinaryWord {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::WidthOutOfRange(n));
        }
        if bits & !mask(n) != 0 {
            return Err(Error::IndexOutOfRange {
                index: 64 - (bits & !mask(n)).leading_zeros() as usize,
                n,
            });
        }
        Ok(BinaryWord { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// State of neuron `i` (1-based).
    pub fn get(&self, i: usize) -> bool {
        (1..=self.n).contains(&i) && self.bits & (1 << (i - 1)) != 0
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A set of length-`n` binary words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NeuralCode {
    n: usize,
    words: BTreeSet<u64>,
}

impl NeuralCode {
    /// Builds a code from raw words (bit `i - 1` is neuron `i`).
    pub fn new(n: usize, words: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for w in words {
            set.insert(BinaryWord::new(n, w)?.bits);
        }
        if n == 0 || n > MAX_N {
            return Err(Error::WidthOutOfRange(n));
        }
        Ok(NeuralCode { n, words: set })
    }

    /// Every word of length `n`.
    pub fn full(n: usize) -> Result<Self> {
        oracle_width(n)?;
        NeuralCode::new(n, 0..1u64 << n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        w.n == self.n && self.words.contains(&w.bits)
    }

    pub fn contains_bits(&self, bits: u64) -> bool {
        self.words.contains(&bits)
    }

    /// Words in increasing numeric order of their bits.
    pub fn iter(&self) -> impl Iterator<Item = BinaryWord> + '_ {
        self.words
            .iter()
            .map(move |&bits| BinaryWord { n: self.n, bits })
    }
}

impl fmt::Display for NeuralCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (t, w) in self.iter().enumerate() {
            if t > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for NeuralCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {self}", self.n)
    }
}

/// Value of `prod_{i in pos} x_i prod_{i in neg} (1 - x_i)` at `v`.
pub fn evaluate(f: &Pseudomonomial, v: &BinaryWord) -> Result<bool> {
    if f.n() != v.n {
        return Err(Error::WidthMismatch {
            left: f.n(),
            right: v.n,
        });
    }
    Ok(nonzero_at(f.xsupp().bits(), f.negsupp().bits(), v.bits))
}

fn nonzero_at(pos: u64, neg: u64, w: u64) -> bool {
    w & pos == pos && w & neg == 0
}

/// The words on which every generator, depolarized, vanishes.
pub fn code_of_ideal(a: &MonomialIdeal) -> Result<NeuralCode> {
    oracle_width(a.n())?;
    let gens: Vec<Pseudomonomial> = a
        .gens()
        .iter()
        .map(SfMonomial::depolarize)
        .collect::<Result<_>>()?;
    let words = (0..1u64 << a.n()).filter(|&w| {
        gens.iter()
            .all(|g| !nonzero_at(g.xsupp().bits(), g.negsupp().bits(), w))
    });
    NeuralCode::new(a.n(), words)
}

/// The canonical form of the neural ideal of `c`, polarized, in display
/// order.
///
/// Pseudomonomials are enumerated in ternary-counter order, digit `i - 1`
/// being 0 (no factor), 1 (`x_i`) or 2 (`1 - x_i`). The empty code is
/// rejected: every pseudomonomial vanishes on it.
pub fn oracle_canonical(c: &NeuralCode) -> Result<MonomialIdeal> {
    oracle_width(c.n)?;
    if c.is_empty() {
        return Err(Error::DegenerateCode);
    }
    let words: Vec<u64> = c.words.iter().copied().collect();
    let vanishes = |pos: u64, neg: u64| !words.iter().any(|&w| nonzero_at(pos, neg, w));
    let n = c.n;
    let mut out = Vec::new();
    let mut digits = vec![0u8; n];
    let (mut pos, mut neg) = (0u64, 0u64);
    loop {
        if vanishes(pos, neg) {
            let minimal = (0..n).all(|i| {
                let b = 1u64 << i;
                !(pos & b != 0 && vanishes(pos & !b, neg)
                    || neg & b != 0 && vanishes(pos, neg & !b))
            });
            if minimal {
                out.push(SfMonomial::new(
                    n,
                    IndexSet::from_bits(pos),
                    IndexSet::from_bits(neg),
                )?);
            }
        }
        // Ternary increment.
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return MonomialIdeal::new(n, out);
            }
            let b = 1u64 << i;
            match digits[i] {
                0 => {
                    digits[i] = 1;
                    pos |= b;
                    break;
                }
                1 => {
                    digits[i] = 2;
                    pos &= !b;
                    neg |= b;
                    break;
                }
                _ => {
                    digits[i] = 0;
                    neg &= !b;
                    i += 1;
                }
            }
        }
    }
}

/// The neural ideal generated by the indicator pseudomonomials of the
/// non-codewords, polarized: for `v` outside `c`, `x` on the ones of `v`
/// and `y` on its zeros.
pub fn ideal_of_code(c: &NeuralCode) -> Result<MonomialIdeal> {
    oracle_width(c.n)?;
    let m = mask(c.n);
    let gens = (0..1u64 << c.n)
        .filter(|w| !c.words.contains(w))
        .map(|w| SfMonomial::new(c.n, IndexSet::from_bits(w), IndexSet::from_bits(!w & m)))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(c.n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ideal;

    fn word(s: &str) -> BinaryWord {
        let bits = s
            .chars()
            .enumerate()
            .filter(|(_, c)| *c == '1')
            .fold(0, |acc, (i, _)| acc | 1 << i);
        BinaryWord::new(s.len(), bits).unwrap()
    }

    #[test]
    fn evaluation() {
        let f = Pseudomonomial::new(2, IndexSet::singleton(1), IndexSet::singleton(2)).unwrap();
        assert!(evaluate(&f, &word("10")).unwrap());
        assert!(!evaluate(&f, &word("11")).unwrap());
        let one = Pseudomonomial::one(3).unwrap();
        assert!(evaluate(&one, &word("010")).unwrap());
        assert!(evaluate(&one, &word("01")).is_err());
    }

    #[test]
    fn codes_of_ideals() {
        let c = code_of_ideal(&parse_ideal("x1, x2*y1", None).unwrap()).unwrap();
        assert_eq!(c.to_string(), "{00}");
        let zero = MonomialIdeal::zero(2).unwrap();
        assert_eq!(code_of_ideal(&zero).unwrap().len(), 4);
        let c = code_of_ideal(&parse_ideal("x1", None).unwrap()).unwrap();
        assert_eq!(c.to_string(), "{0}");
        let bad = parse_ideal("x1*y1", None).unwrap();
        assert_eq!(
            code_of_ideal(&bad),
            Err(Error::BooleanDivisible { index: 1 })
        );
    }

    #[test]
    fn oracle_examples() {
        let c = NeuralCode::new(2, [0]).unwrap();
        assert_eq!(oracle_canonical(&c).unwrap().to_string(), "(x1, x2)");
        assert!(oracle_canonical(&NeuralCode::full(3).unwrap())
            .unwrap()
            .is_empty());
        let a = parse_ideal("x1*y2, x3*y1", None).unwrap();
        let c = code_of_ideal(&a).unwrap();
        assert_eq!(
            oracle_canonical(&c).unwrap().to_string(),
            "(x1*y2, x3*y1, x3*y2)"
        );
        let empty = NeuralCode::new(2, []).unwrap();
        assert_eq!(oracle_canonical(&empty), Err(Error::DegenerateCode));
    }

    #[test]
    fn indicator_ideal() {
        let c = NeuralCode::new(2, [0]).unwrap();
        let a = ideal_of_code(&c).unwrap();
        assert!(a.same_generators(&parse_ideal("x1*x2, x1*y2, x2*y1", None).unwrap()));
        assert_eq!(code_of_ideal(&a).unwrap(), c);
        assert!(ideal_of_code(&NeuralCode::full(2).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn limits() {
        let wide = MonomialIdeal::zero(17).unwrap();
        assert_eq!(
            code_of_ideal(&wide),
            Err(Error::OracleLimit { n: 17, limit: 16 })
        );
        assert!(BinaryWord::new(2, 0b100).is_err());
    }
}
