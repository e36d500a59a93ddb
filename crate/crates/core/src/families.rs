//! Closed-form canonical forms of structured families, and generic canonical
//! forms over placeholder variables.
//!
//! A placeholder `z_j` stands for an arbitrary squarefree monomial sharing no
//! index with the rest of the ideal. Canonical forms computed with the
//! placeholders treated as ordinary variables (they never pair with anything)
//! specialize to concrete canonical forms by substituting, replacing products
//! with LCMs, and removing Boolean-divisible generators and multiples.
//!
//! The family closed forms are generated from their displayed formulas and
//! then reduced, which covers every degenerate case where LCMs collide.

use std::fmt;

use crate::engine::{finish, recompose_supports};
use crate::error::{Error, Result};
use crate::monomial::{IndexSet, MonomialIdeal, SfMonomial};
use crate::support::Support;

/// A monomial over `x`, `y` and the placeholders `z_1..z_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtMonomial {
    base: SfMonomial,
    z: IndexSet,
}

impl ExtMonomial {
    /// Checks that every placeholder lies in `z_1..z_k`.
    pub fn new(base: SfMonomial, z: IndexSet, k: usize) -> Result<Self> {
        if let Some(top) = z.max() {
            if top > k {
                return Err(Error::PlaceholderOutOfRange { z: top, k });
            }
        }
        Ok(ExtMonomial { base, z })
    }

    pub fn from_base(base: SfMonomial) -> Self {
        ExtMonomial {
            base,
            z: IndexSet::EMPTY,
        }
    }

    pub fn base(&self) -> SfMonomial {
        self.base
    }

    pub fn zsupp(&self) -> IndexSet {
        self.z
    }

    pub fn degree(&self) -> usize {
        self.base.degree() + self.z.len()
    }

    pub(crate) fn support(&self) -> Support {
        let b = self.base.support();
        Support::new(b.x, b.y, self.z.bits())
    }

    fn from_support(n: usize, s: Support) -> Self {
        ExtMonomial {
            base: SfMonomial::from_support(n, Support::new(s.x, s.y, 0)),
            z: IndexSet::from_bits(s.z),
        }
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.z.is_empty() {
            return write!(f, "{}", self.base);
        }
        if !self.base.is_one() {
            write!(f, "{}*", self.base)?;
        }
        for (t, j) in self.z.iter().enumerate() {
            if t > 0 {
                f.write_str("*")?;
            }
            write!(f, "z{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An ideal of extended monomials with `k` placeholders.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtIdeal {
    n: usize,
    k: usize,
    gens: Vec<ExtMonomial>,
}

impl ExtIdeal {
    pub fn new(n: usize, k: usize, gens: Vec<ExtMonomial>) -> Result<Self> {
        MonomialIdeal::new(n, gens.iter().map(|g| g.base).collect())?;
        for g in &gens {
            ExtMonomial::new(g.base, g.z, k)?;
        }
        Ok(ExtIdeal { n, k, gens })
    }

    /// The ideal with no placeholders.
    pub fn from_ideal(a: &MonomialIdeal) -> Self {
        ExtIdeal {
            n: a.n(),
            k: 0,
            gens: a
                .gens()
                .iter()
                .copied()
                .map(ExtMonomial::from_base)
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn gens(&self) -> &[ExtMonomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Equality of generator sets.
    pub fn same_generators(&self, other: &ExtIdeal) -> bool {
        let key = |a: &ExtIdeal| {
            let mut s = a.supports();
            s.sort_by(Support::display_cmp);
            s.dedup();
            s
        };
        self.n == other.n && self.k == other.k && key(self) == key(other)
    }

    /// The ideal obtained by substituting each placeholder, with products
    /// replaced by LCMs and nothing removed.
    pub fn apply(&self, sub: &Substitution) -> Result<MonomialIdeal> {
        sub.validate(self)?;
        let images = sub.supports();
        let gens: Vec<Support> = self.supports().iter().map(|&f| image(f, &images)).collect();
        Ok(MonomialIdeal::from_supports(self.n, &gens))
    }

    /// Replaces each generator `b * z_{j1} * .. * z_{jr}` by all the
    /// `[b * g_{j1,s1} * .. * g_{jr,sr}]` with each `g_{j,s}` drawn from
    /// group `j`.
    pub fn expand_groups(&self, groups: &[Vec<SfMonomial>]) -> Result<MonomialIdeal> {
        let groups = check_groups(self, groups)?;
        let mut out: Vec<Support> = Vec::new();
        for f in self.supports() {
            let zs: Vec<usize> = IndexSet::from_bits(f.z).iter().map(|j| j - 1).collect();
            let mut partial = vec![Support::new(f.x, f.y, 0)];
            for &j in &zs {
                partial = partial
                    .iter()
                    .flat_map(|p| groups[j].iter().map(move |g| p.union(*g)))
                    .collect();
            }
            for p in partial {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        Ok(MonomialIdeal::from_supports(self.n, &out))
    }

    pub(crate) fn supports(&self) -> Vec<Support> {
        self.gens.iter().map(ExtMonomial::support).collect()
    }
}

impl fmt::Display for ExtIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (t, g) in self.gens.iter().enumerate() {
            if t > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for ExtIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={} {self}", self.n, self.k)
    }
}

/// Images of the placeholders: `z_j -> images[j - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Substitution {
    images: Vec<SfMonomial>,
}

impl Substitution {
    pub fn new(images: Vec<SfMonomial>) -> Self {
        Substitution { images }
    }

    pub fn images(&self) -> &[SfMonomial] {
        &self.images
    }

    /// Checks the substitution against an extended ideal.
    ///
    /// The images must not create a shared index: no image may carry `x_i`
    /// where a base generator or another image carries `y_i`, or the
    /// reverse. Images may repeat variables already on the same side.
    pub fn validate(&self, generic: &ExtIdeal) -> Result<()> {
        if self.images.len() != generic.k {
            return Err(Error::SubstitutionArity {
                expected: generic.k,
                found: self.images.len(),
            });
        }
        let tagged: Vec<(usize, Support)> = self
            .images
            .iter()
            .enumerate()
            .map(|(j, m)| (j + 1, m.support()))
            .collect();
        for m in &self.images {
            if m.n() != generic.n {
                return Err(Error::WidthMismatch {
                    left: generic.n,
                    right: m.n(),
                });
            }
        }
        check_images(generic, &tagged)
    }

    fn supports(&self) -> Vec<Support> {
        self.images.iter().map(SfMonomial::support).collect()
    }
}

fn check_images(generic: &ExtIdeal, tagged: &[(usize, Support)]) -> Result<()> {
    let base = generic
        .supports()
        .iter()
        .fold(Support::ONE, |acc, g| acc.union(Support::new(g.x, g.y, 0)));
    let all = tagged
        .iter()
        .fold(Support::ONE, |acc, (_, s)| acc.union(*s));
    for &(z, s) in tagged {
        let bad = (s.x & (base.y | all.y)) | (s.y & (base.x | all.x));
        if bad != 0 {
            return Err(Error::InvalidSubstitution {
                z,
                index: bad.trailing_zeros() as usize + 1,
            });
        }
    }
    Ok(())
}

fn check_groups(generic: &ExtIdeal, groups: &[Vec<SfMonomial>]) -> Result<Vec<Vec<Support>>> {
    if groups.len() != generic.k {
        return Err(Error::SubstitutionArity {
            expected: generic.k,
            found: groups.len(),
        });
    }
    let mut tagged = Vec::new();
    for (j, group) in groups.iter().enumerate() {
        if group.is_empty() {
            return Err(Error::EmptyGroup(j + 1));
        }
        for m in group {
            if m.n() != generic.n {
                return Err(Error::WidthMismatch {
                    left: generic.n,
                    right: m.n(),
                });
            }
            tagged.push((j + 1, m.support()));
        }
    }
    check_images(generic, &tagged)?;
    Ok(groups
        .iter()
        .map(|g| g.iter().map(SfMonomial::support).collect())
        .collect())
}

/// `[f(images)]`: the base part of `f` joined with the images of its
/// placeholders.
fn image(f: Support, images: &[Support]) -> Support {
    IndexSet::from_bits(f.z)
        .iter()
        .fold(Support::new(f.x, f.y, 0), |acc, j| acc.union(images[j - 1]))
}

/// The generic canonical form: decompose over `x`, `y` and `z`, drop primes
/// containing some `(x_i, y_i)`, intersect, strip Boolean-divisible
/// generators and remove multiples. Placeholders never pair.
///
/// ```
/// use neuralcanon::{generic_canonical, text::parse_ext_file};
/// let g = parse_ext_file("x1*z1\ny1*z2\n", None, None).unwrap();
/// assert_eq!(generic_canonical(&g).unwrap().to_string(), "(x1*z1, y1*z2, z1*z2)");
/// ```
pub fn generic_canonical(a: &ExtIdeal) -> Result<ExtIdeal> {
    let gens = a.supports();
    if gens.iter().any(|g| g.is_one()) {
        return Err(Error::UnitIdeal);
    }
    let gens: Vec<Support> = gens.into_iter().filter(|g| g.is_boolean_free()).collect();
    let (recomposed, _) = recompose_supports(&gens, IndexSet::full(a.n).bits());
    Ok(ExtIdeal {
        n: a.n,
        k: a.k,
        gens: finish(recomposed)
            .into_iter()
            .map(|s| ExtMonomial::from_support(a.n, s))
            .collect(),
    })
}

/// Specializes a generic canonical form: substitute, replace products with
/// LCMs, strip Boolean-divisible generators, remove multiples.
pub fn substitute(generic: &ExtIdeal, sub: &Substitution) -> Result<MonomialIdeal> {
    let raw = generic.apply(sub)?;
    Ok(MonomialIdeal::from_supports(
        generic.n,
        &finish(raw.supports()),
    ))
}

/// Canonical form of the ideal obtained by replacing each `z_j` of a
/// generic almost canonical form with every member of group `j`.
///
/// The generators are the images of the generic generators in which, for
/// some set `T` of placeholders, every `z_i` with `i` in `T` becomes the last
/// member of group `i` and every other `z_i` becomes 1, multiplied by one
/// choice among the remaining members of each group outside `T`. The family
/// is then Boolean-stripped and reduced.
pub fn expand_repeats(generic: &ExtIdeal, groups: &[Vec<SfMonomial>]) -> Result<MonomialIdeal> {
    let groups = check_groups(generic, groups)?;
    let k = generic.k;
    let fs = generic.supports();
    let mut out: Vec<Support> = Vec::new();
    for t in 0u64..(1u64 << k) {
        let mut images = vec![Support::ONE; k];
        let mut prefixes = vec![Support::ONE];
        for (i, group) in groups.iter().enumerate() {
            if t & (1 << i) != 0 {
                images[i] = *group.last().expect("groups are nonempty");
            } else {
                let head = &group[..group.len() - 1];
                prefixes = prefixes
                    .iter()
                    .flat_map(|p| head.iter().map(move |g| p.union(*g)))
                    .collect();
            }
        }
        for &f in &fs {
            let value = image(f, &images);
            out.extend(prefixes.iter().map(|p| p.union(value)));
        }
    }
    Ok(MonomialIdeal::from_supports(generic.n, &finish(out)))
}

/// Validates the free monomials of a family: common width `n >= reserved`,
/// Boolean-free, no variable with index `1..=reserved`, and no index shared
/// between two of them.
fn check_free(gs: &[SfMonomial], reserved: usize) -> Result<usize> {
    let n = gs
        .first()
        .map(SfMonomial::n)
        .ok_or_else(|| Error::MalformedFamily("no monomials given".into()))?;
    if reserved > n {
        return Err(Error::MalformedFamily(format!(
            "width {n} is too small for {reserved} reserved indices"
        )));
    }
    let reserved_mask = IndexSet::full(reserved);
    for (j, g) in gs.iter().enumerate() {
        if g.n() != n {
            return Err(Error::WidthMismatch {
                left: n,
                right: g.n(),
            });
        }
        if let Some(i) = g.boolean_indices().iter().next() {
            return Err(Error::MalformedFamily(format!(
                "monomial {} ({g}) is divisible by x{i}*y{i}",
                j + 1
            )));
        }
        let used = g.xsupp().union(g.ysupp()).intersection(reserved_mask);
        if let Some(i) = used.iter().next() {
            return Err(Error::MalformedFamily(format!(
                "monomial {} ({g}) uses reserved index {i}",
                j + 1
            )));
        }
        for (l, h) in gs.iter().enumerate().skip(j + 1) {
            if let Some(i) = g.shared_unchecked(h).iter().next() {
                return Err(Error::MalformedFamily(format!(
                    "monomials {} and {} share index {i}",
                    j + 1,
                    l + 1
                )));
            }
        }
    }
    Ok(n)
}

fn var_x(i: usize) -> Support {
    Support::new(1 << (i - 1), 0, 0)
}

fn var_y(i: usize) -> Support {
    Support::new(0, 1 << (i - 1), 0)
}

fn lcm_all<'a>(it: impl IntoIterator<Item = &'a Support>) -> Support {
    it.into_iter().fold(Support::ONE, |acc, s| acc.union(*s))
}

fn check_count(what: &str, k: usize, found: usize) -> Result<()> {
    if found != k {
        return Err(Error::MalformedFamily(format!(
            "{what} needs {k} monomials, found {found}"
        )));
    }
    Ok(())
}

/// The chain `(x_1 g_1, x_2 y_1 g_2, .., x_{k-1} y_{k-2} g_{k-1}, y_{k-1} g_k)`.
pub fn chain_ideal(k: usize, gs: &[SfMonomial]) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::MalformedFamily(
            "chain length must be at least 1".into(),
        ));
    }
    check_count("a chain of length k", k, gs.len())?;
    let n = check_free(gs, k - 1)?;
    let gens: Vec<Support> = (1..=k)
        .map(|j| {
            let mut s = gs[j - 1].support();
            if j < k {
                s = s.union(var_x(j));
            }
            if j > 1 {
                s = s.union(var_y(j - 1));
            }
            s
        })
        .collect();
    Ok(MonomialIdeal::from_supports(n, &gens))
}

/// Canonical form of [`chain_ideal`]: the generators
/// `x_j y_i [g_{i+1} .. g_j]` for `0 <= i < j <= k`, where `y_0 = x_k = 1`,
/// reduced. In generic position there are `k(k+1)/2` of them.
///
/// ```
/// use neuralcanon::{chain_canonical, text::parse_monomial};
/// let gs: Vec<_> = ["x3", "x4", "x3*x4"].iter().map(|s| parse_monomial(s, 4).unwrap()).collect();
/// assert_eq!(chain_canonical(3, &gs).unwrap().to_string(), "(x1*x3, x3*x4, x2*x4*y1)");
/// ```
pub fn chain_canonical(k: usize, gs: &[SfMonomial]) -> Result<MonomialIdeal> {
    let n = chain_ideal(k, gs)?.n();
    let g: Vec<Support> = gs.iter().map(SfMonomial::support).collect();
    let mut out = Vec::with_capacity(k * (k + 1) / 2);
    for i in 0..k {
        for j in i + 1..=k {
            let mut s = lcm_all(&g[i..j]);
            if j < k {
                s = s.union(var_x(j));
            }
            if i > 0 {
                s = s.union(var_y(i));
            }
            out.push(s);
        }
    }
    Ok(MonomialIdeal::from_supports(n, &finish(out)))
}

/// The cycle `(x_1 y_k g_1, x_2 y_1 g_2, .., x_k y_{k-1} g_k)` for `k >= 3`.
pub fn cycle_ideal(k: usize, gs: &[SfMonomial]) -> Result<MonomialIdeal> {
    if k < 3 {
        return Err(Error::MalformedFamily(
            "cycle length must be at least 3".into(),
        ));
    }
    check_count("a cycle of length k", k, gs.len())?;
    let n = check_free(gs, k)?;
    let gens: Vec<Support> = (1..=k)
        .map(|j| {
            let prev = if j == 1 { k } else { j - 1 };
            gs[j - 1].support().union(var_x(j)).union(var_y(prev))
        })
        .collect();
    Ok(MonomialIdeal::from_supports(n, &gens))
}

/// Canonical form of [`cycle_ideal`]: for every `i != j`, the generator
/// `x_j y_i [g_{i+1} .. g_j]` with indices taken cyclically. Each generator
/// carries its own `x_j y_i`, so none divides another.
pub fn cycle_canonical(k: usize, gs: &[SfMonomial]) -> Result<MonomialIdeal> {
    let n = cycle_ideal(k, gs)?.n();
    let g: Vec<Support> = gs.iter().map(SfMonomial::support).collect();
    let mut out = Vec::with_capacity(k * (k - 1));
    for i in 1..=k {
        for j in (1..=k).filter(|&j| j != i) {
            let mut s = var_x(j).union(var_y(i));
            let mut t = i % k + 1;
            loop {
                s = s.union(g[t - 1]);
                if t == j {
                    break;
                }
                t = t % k + 1;
            }
            out.push(s);
        }
    }
    out.sort_by(Support::display_cmp);
    Ok(MonomialIdeal::from_supports(n, &out))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SpreadOrientation {
    /// One generator `x_1 .. x_k g` against blocks of `y`.
    #[default]
    Standard,
    /// The same with `x` and `y` exchanged on the reserved indices.
    Reversed,
}

/// A spread family: one generator carrying every reserved index `1..=k` on
/// one side, and a partition of those indices into blocks carried on the
/// other side, one generator per block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpreadShape {
    k: usize,
    blocks: Vec<IndexSet>,
    orientation: SpreadOrientation,
}

impl SpreadShape {
    /// `blocks` must partition `{1..k}` for some `k >= 1`.
    pub fn new(blocks: Vec<Vec<usize>>, orientation: SpreadOrientation) -> Result<Self> {
        let mut seen = IndexSet::EMPTY;
        let mut sets = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::MalformedFamily(format!("block {} is empty", b + 1)));
            }
            let mut set = IndexSet::EMPTY;
            for &i in block {
                if i == 0 || i > crate::MAX_N {
                    return Err(Error::MalformedFamily(format!("index {i} is out of range")));
                }
                if seen.contains(i) {
                    return Err(Error::MalformedFamily(format!(
                        "index {i} appears in two blocks"
                    )));
                }
                seen.insert(i);
                set.insert(i);
            }
            sets.push(set);
        }
        let k = seen.len();
        if k == 0 || seen != IndexSet::full(k) {
            return Err(Error::MalformedFamily(
                "blocks must partition 1..k for some k >= 1".into(),
            ));
        }
        Ok(SpreadShape {
            k,
            blocks: sets,
            orientation,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[IndexSet] {
        &self.blocks
    }

    pub fn orientation(&self) -> SpreadOrientation {
        self.orientation
    }

    /// `(long side, block side)` variable supports.
    fn sides(&self, long: IndexSet, block: IndexSet) -> (Support, Support) {
        let l = long.bits();
        let b = block.bits();
        match self.orientation {
            SpreadOrientation::Standard => (Support::new(l, 0, 0), Support::new(0, b, 0)),
            SpreadOrientation::Reversed => (Support::new(0, l, 0), Support::new(b, 0, 0)),
        }
    }
}

/// The spread ideal `(x_1 .. x_k g, y_{B_1} g_1, .., y_{B_s} g_s)` (or the
/// reversed form) for blocks `B_1, .., B_s`.
pub fn spread_ideal(
    shape: &SpreadShape,
    g: &SfMonomial,
    gs: &[SfMonomial],
) -> Result<MonomialIdeal> {
    check_count("the spread shape", shape.blocks.len(), gs.len())?;
    let mut all = vec![*g];
    all.extend_from_slice(gs);
    let n = check_free(&all, shape.k)?;
    let full = IndexSet::full(shape.k);
    let mut gens = vec![shape.sides(full, IndexSet::EMPTY).0.union(g.support())];
    for (block, gb) in shape.blocks.iter().zip(gs) {
        gens.push(shape.sides(IndexSet::EMPTY, *block).1.union(gb.support()));
    }
    Ok(MonomialIdeal::from_supports(n, &gens))
}

/// Canonical form of [`spread_ideal`]. Besides the original generators, for
/// every nonempty set `S` of singleton blocks it contains
/// `x_{[k] \ S} [g * prod_{b in S} g_b]`, then everything is reduced. With no
/// singleton blocks the ideal is already canonical.
///
/// ```
/// use neuralcanon::{spread_canonical, SpreadOrientation, SpreadShape, text::parse_monomial};
/// let shape = SpreadShape::new(vec![vec![1, 2], vec![3]], SpreadOrientation::Standard).unwrap();
/// let m = |s: &str| parse_monomial(s, 4).unwrap();
/// let c = spread_canonical(&shape, &m("1"), &[m("1"), m("x4")]).unwrap();
/// assert_eq!(c.to_string(), "(x4*y3, y1*y2, x1*x2*x3, x1*x2*x4)");
/// ```
pub fn spread_canonical(
    shape: &SpreadShape,
    g: &SfMonomial,
    gs: &[SfMonomial],
) -> Result<MonomialIdeal> {
    let base = spread_ideal(shape, g, gs)?;
    let singles: Vec<(IndexSet, Support)> = shape
        .blocks
        .iter()
        .zip(gs)
        .filter(|(b, _)| b.len() == 1)
        .map(|(b, gb)| (*b, gb.support()))
        .collect();
    if singles.len() >= 64 {
        return Err(Error::MalformedFamily("too many singleton blocks".into()));
    }
    let full = IndexSet::full(shape.k);
    let mut out = base.supports();
    for mask in 1u64..(1u64 << singles.len()) {
        let mut covered = IndexSet::EMPTY;
        let mut s = g.support();
        for (t, (b, gb)) in singles.iter().enumerate() {
            if mask & (1 << t) != 0 {
                covered = covered.union(*b);
                s = s.union(*gb);
            }
        }
        out.push(
            shape
                .sides(full.difference(covered), IndexSet::EMPTY)
                .0
                .union(s),
        );
    }
    Ok(MonomialIdeal::from_supports(base.n(), &finish(out)))
}
