//! Squarefree monomials over `x_1..x_n, y_1..y_n`, pseudomonomials over
//! `x_1..x_n`, and monomial ideals.
//!
//! Index sets are single 64-bit words, so every set operation on supports is
//! word-parallel. Indices are 1-based in the public API; index `i` lives in
//! bit `i - 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::support::{minimalize, Support};

/// Largest supported ambient width.
pub const MAX_N: usize = 64;

fn check_width(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        Err(Error::WidthOutOfRange(n))
    } else {
        Ok(())
    }
}

fn width_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_indices(mask: u64, n: usize) -> Result<()> {
    let outside = mask & !width_mask(n);
    if outside != 0 {
        Err(Error::IndexOutOfRange {
            index: outside.trailing_zeros() as usize + 1,
            n,
        })
    } else {
        Ok(())
    }
}

/// A set of indices drawn from `1..=64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, .., n}`.
    pub fn full(n: usize) -> Self {
        IndexSet(width_mask(n.min(MAX_N)))
    }

    pub fn singleton(index: usize) -> Self {
        let mut s = IndexSet::EMPTY;
        s.insert(index);
        s
    }

    /// # Panics
    /// If `index` is outside `1..=64`.
    pub fn insert(&mut self, index: usize) {
        assert!(
            (1..=MAX_N).contains(&index),
            "index {index} outside 1..={MAX_N}"
        );
        self.0 |= 1 << (index - 1);
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=MAX_N).contains(&index) && self.0 & (1 << (index - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The largest member, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut word = self.0;
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let i = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(i + 1)
            }
        })
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = IndexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
}

/// A single variable `x_i` or `y_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub axis: Axis,
    pub index: usize,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.axis {
            Axis::X => write!(f, "x{}", self.index),
            Axis::Y => write!(f, "y{}", self.index),
        }
    }
}

/// A squarefree monomial `prod_{i in xsupp} x_i * prod_{i in ysupp} y_i`.
///
/// `xsupp` and `ysupp` may overlap: intermediate stages of recomposition
/// carry monomials divisible by `x_i * y_i`. See [`SfMonomial::is_boolean_free`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SfMonomial {
    n: u8,
    x: IndexSet,
    y: IndexSet,
}

impl SfMonomial {
    pub fn new(n: usize, xsupp: IndexSet, ysupp: IndexSet) -> Result<Self> {
        check_width(n)?;
        check_indices(xsupp.bits() | ysupp.bits(), n)?;
        Ok(SfMonomial {
            n: n as u8,
            x: xsupp,
            y: ysupp,
        })
    }

    pub fn from_indices(n: usize, xs: &[usize], ys: &[usize]) -> Result<Self> {
        for &i in xs.iter().chain(ys) {
            if i == 0 || i > n.min(MAX_N) {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
        }
        SfMonomial::new(
            n,
            xs.iter().copied().collect(),
            ys.iter().copied().collect(),
        )
    }

    /// The constant monomial 1.
    pub fn one(n: usize) -> Result<Self> {
        SfMonomial::new(n, IndexSet::EMPTY, IndexSet::EMPTY)
    }

    pub fn var(n: usize, var: Var) -> Result<Self> {
        if var.index == 0 || var.index > n.min(MAX_N) {
            return Err(Error::IndexOutOfRange {
                index: var.index,
                n,
            });
        }
        let s = IndexSet::singleton(var.index);
        match var.axis {
            Axis::X => SfMonomial::new(n, s, IndexSet::EMPTY),
            Axis::Y => SfMonomial::new(n, IndexSet::EMPTY, s),
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn xsupp(&self) -> IndexSet {
        self.x
    }

    pub fn ysupp(&self) -> IndexSet {
        self.y
    }

    pub fn degree(&self) -> usize {
        self.x.len() + self.y.len()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_empty() && self.y.is_empty()
    }

    /// Indices `i` such that `x_i * y_i` divides this monomial.
    pub fn boolean_indices(&self) -> IndexSet {
        self.x.intersection(self.y)
    }

    /// True when no `x_i * y_i` divides the monomial, i.e. it is the
    /// polarization of a genuine pseudomonomial.
    pub fn is_boolean_free(&self) -> bool {
        self.boolean_indices().is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.x
            .iter()
            .map(|index| Var {
                axis: Axis::X,
                index,
            })
            .chain(self.y.iter().map(|index| Var {
                axis: Axis::Y,
                index,
            }))
    }

    fn same_width(&self, other: &SfMonomial) -> Result<()> {
        if self.n != other.n {
            Err(Error::WidthMismatch {
                left: self.n(),
                right: other.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Least common multiple: the union of the supports.
    pub fn lcm(&self, other: &SfMonomial) -> Result<SfMonomial> {
        self.same_width(other)?;
        Ok(self.lcm_unchecked(other))
    }

    /// `self | other`, i.e. support containment.
    pub fn divides(&self, other: &SfMonomial) -> Result<bool> {
        self.same_width(other)?;
        Ok(self.divides_unchecked(other))
    }

    /// Indices `i` with `x_i` dividing one monomial and `y_i` the other.
    pub fn shared_indices(&self, other: &SfMonomial) -> Result<IndexSet> {
        self.same_width(other)?;
        Ok(self.shared_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &SfMonomial) -> SfMonomial {
        SfMonomial {
            n: self.n,
            x: self.x.union(other.x),
            y: self.y.union(other.y),
        }
    }

    pub(crate) fn divides_unchecked(&self, other: &SfMonomial) -> bool {
        self.x.is_subset(other.x) && self.y.is_subset(other.y)
    }

    pub(crate) fn shared_unchecked(&self, other: &SfMonomial) -> IndexSet {
        IndexSet::from_bits(self.support().shared(other.support()))
    }

    /// The same monomial viewed in a wider (or equal) ambient ring.
    pub fn widen(&self, n: usize) -> Result<SfMonomial> {
        SfMonomial::new(n, self.x, self.y)
    }

    pub fn depolarize(&self) -> Result<Pseudomonomial> {
        match self.boolean_indices().iter().next() {
            Some(index) => Err(Error::BooleanDivisible { index }),
            None => Ok(Pseudomonomial {
                n: self.n,
                pos: self.x,
                neg: self.y,
            }),
        }
    }

    pub(crate) fn support(&self) -> Support {
        Support::new(self.x.bits(), self.y.bits(), 0)
    }

    pub(crate) fn from_support(n: usize, s: Support) -> SfMonomial {
        debug_assert_eq!(s.z, 0);
        SfMonomial {
            n: n as u8,
            x: IndexSet::from_bits(s.x),
            y: IndexSet::from_bits(s.y),
        }
    }
}

impl Ord for SfMonomial {
    /// Total degree, then lexicographic order of the variable lists with
    /// `x_1 < .. < x_n < y_1 < .. < y_n`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.support()
            .display_cmp(&other.support())
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for SfMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, v) in self.vars().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `prod_{i in pos} x_i * prod_{i in neg} (1 - x_i)` with `pos` and `neg` disjoint.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pseudomonomial {
    n: u8,
    pos: IndexSet,
    neg: IndexSet,
}

impl Pseudomonomial {
    pub fn new(n: usize, pos: IndexSet, neg: IndexSet) -> Result<Self> {
        check_width(n)?;
        check_indices(pos.bits() | neg.bits(), n)?;
        if let Some(index) = pos.intersection(neg).iter().next() {
            return Err(Error::NotPseudomonomial { index });
        }
        Ok(Pseudomonomial {
            n: n as u8,
            pos,
            neg,
        })
    }

    pub fn one(n: usize) -> Result<Self> {
        Pseudomonomial::new(n, IndexSet::EMPTY, IndexSet::EMPTY)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Indices carrying an `x_i` factor.
    pub fn xsupp(&self) -> IndexSet {
        self.pos
    }

    /// Indices carrying a `(1 - x_i)` factor.
    pub fn negsupp(&self) -> IndexSet {
        self.neg
    }

    /// `(1 - x_i) -> y_i`.
    pub fn polarize(&self) -> SfMonomial {
        SfMonomial {
            n: self.n,
            x: self.pos,
            y: self.neg,
        }
    }

    /// Whether `self` divides `other` in `F_2[x_1..x_n]`.
    pub fn divides(&self, other: &Pseudomonomial) -> bool {
        self.pos.is_subset(other.pos) && self.neg.is_subset(other.neg)
    }
}

impl fmt::Display for Pseudomonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pos.is_empty() && self.neg.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for i in self.pos.iter() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{i}")?;
        }
        for i in self.neg.iter() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "(1-x{i})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pseudomonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An ambient width and an ordered generator list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<SfMonomial>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<SfMonomial>) -> Result<Self> {
        check_width(n)?;
        for g in &gens {
            if g.n() != n {
                return Err(Error::WidthMismatch {
                    left: n,
                    right: g.n(),
                });
            }
        }
        Ok(MonomialIdeal { n, gens })
    }

    /// The zero ideal (no generators).
    pub fn zero(n: usize) -> Result<Self> {
        MonomialIdeal::new(n, Vec::new())
    }

    pub fn unit(n: usize) -> Result<Self> {
        MonomialIdeal::new(n, vec![SfMonomial::one(n)?])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[SfMonomial] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<SfMonomial> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when the constant 1 is among the generators.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(SfMonomial::is_one)
    }

    pub fn is_boolean_free(&self) -> bool {
        self.gens.iter().all(SfMonomial::is_boolean_free)
    }

    /// Membership of a monomial: some generator divides it.
    pub fn contains(&self, m: &SfMonomial) -> Result<bool> {
        if m.n() != self.n {
            return Err(Error::WidthMismatch {
                left: self.n,
                right: m.n(),
            });
        }
        Ok(self.gens.iter().any(|g| g.divides_unchecked(m)))
    }

    /// Generators sorted by (degree, lex) with duplicates removed.
    pub fn sorted(&self) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.sort();
        gens.dedup();
        MonomialIdeal { n: self.n, gens }
    }

    /// Equality of generator sets (order and multiplicity ignored).
    pub fn same_generators(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.sorted().gens == other.sorted().gens
    }

    /// Equality as ideals: the minimal generating sets agree.
    pub fn same_ideal(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.minimal().gens == other.minimal().gens
    }

    /// Minimal generating set in display order (no Boolean stripping).
    pub fn minimal(&self) -> MonomialIdeal {
        let mut s = self.supports();
        minimalize(&mut s);
        MonomialIdeal::from_supports(self.n, &s)
    }

    /// Generators in `self` but not in `other`, in `self`'s order.
    pub fn difference(&self, other: &MonomialIdeal) -> Vec<SfMonomial> {
        let mut out: Vec<SfMonomial> = Vec::new();
        for g in &self.gens {
            if !other.gens.contains(g) && !out.contains(g) {
                out.push(*g);
            }
        }
        out
    }

    pub(crate) fn supports(&self) -> Vec<Support> {
        self.gens.iter().map(SfMonomial::support).collect()
    }

    pub(crate) fn from_supports(n: usize, supports: &[Support]) -> MonomialIdeal {
        MonomialIdeal {
            n,
            gens: supports
                .iter()
                .map(|&s| SfMonomial::from_support(n, s))
                .collect(),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {self}", self.n)
    }
}
