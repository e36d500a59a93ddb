//! Minimal primes of squarefree monomial ideals and intersection of primes.
//!
//! A squarefree monomial ideal is the intersection of the primes generated by
//! the minimal vertex covers of its generator hypergraph, and this
//! decomposition is unique. Two strategies compute it: recursive splitting
//! `(G, v*h) = (G, v) ∩ (G, h)` with memoization, and an incremental
//! minimal-transversal frontier. Both return identical prime sets.
//!
//! Conventions for the corners: the unit ideal has no primes, and the zero
//! ideal (no generators) has the single prime `(0)`. Dually, the empty
//! intersection is the unit ideal.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Axis, IndexSet, MonomialIdeal, Var};
use crate::support::{minimalize, transversal_frontier, Support};

/// A prime generated by a set of the variables `x_i`, `y_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    n: usize,
    x: IndexSet,
    y: IndexSet,
}

impl MonomialPrime {
    pub fn new(n: usize, x: IndexSet, y: IndexSet) -> Result<Self> {
        // Width and index checks are shared with monomials.
        let m = crate::monomial::SfMonomial::new(n, x, y)?;
        Ok(MonomialPrime { n: m.n(), x, y })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Indices `i` with `x_i` among the generators.
    pub fn xvars(&self) -> IndexSet {
        self.x
    }

    /// Indices `i` with `y_i` among the generators.
    pub fn yvars(&self) -> IndexSet {
        self.y
    }

    pub fn len(&self) -> usize {
        self.x.len() + self.y.len()
    }

    /// True for the zero prime `(0)`.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains_var(&self, var: Var) -> bool {
        match var.axis {
            Axis::X => self.x.contains(var.index),
            Axis::Y => self.y.contains(var.index),
        }
    }

    /// Whether both `x_i` and `y_i` are generators.
    pub fn contains_pair(&self, index: usize) -> bool {
        self.x.contains(index) && self.y.contains(index)
    }

    /// All `i` with `(x_i, y_i)` contained in the prime.
    pub fn pair_indices(&self) -> IndexSet {
        self.x.intersection(self.y)
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

    pub(crate) fn support(&self) -> Support {
        Support::new(self.x.bits(), self.y.bits(), 0)
    }

    pub(crate) fn from_support(n: usize, s: Support) -> Self {
        MonomialPrime {
            n,
            x: IndexSet::from_bits(s.x),
            y: IndexSet::from_bits(s.y),
        }
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, v) in self.vars().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DecompositionStrategy {
    /// Split `(G, v*h)` into `(G, v) ∩ (G, h)` until every generator is a
    /// variable.
    #[default]
    Splitting,
    /// Enumerate minimal transversals of the generator hypergraph.
    Transversal,
}

/// Minimal primes of the ideal generated by `gens`, as variable supports in
/// display order.
pub(crate) fn primes_of(gens: &[Support], strategy: DecompositionStrategy) -> Vec<Support> {
    let mut primes = match strategy {
        DecompositionStrategy::Splitting => {
            let mut memo = HashMap::new();
            split(gens.to_vec(), &mut memo)
        }
        DecompositionStrategy::Transversal => transversal_frontier(gens),
    };
    minimalize(&mut primes);
    primes
}

fn split(mut gens: Vec<Support>, memo: &mut HashMap<Vec<Support>, Vec<Support>>) -> Vec<Support> {
    minimalize(&mut gens);
    if gens.first().is_some_and(|g| g.is_one()) {
        return Vec::new();
    }
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let max_degree = gens.iter().map(|g| g.degree()).max().unwrap_or(0);
    let result = if max_degree <= 1 {
        vec![gens.iter().fold(Support::ONE, |acc, &g| acc.union(g))]
    } else {
        let pos = gens
            .iter()
            .position(|g| g.degree() == max_degree)
            .expect("a generator of maximal degree exists");
        let g = gens[pos];
        let v = g.lowest_var().expect("generator has degree at least 2");

        let mut with_var = gens.clone();
        with_var.push(v);
        let mut with_rest = gens.clone();
        with_rest[pos] = g.without(v);

        let mut out = split(with_var, memo);
        out.extend(split(with_rest, memo));
        minimalize(&mut out);
        out
    };
    memo.insert(gens, result.clone());
    result
}

/// Minimal primes with the default splitting strategy.
///
/// ```
/// use neuralcanon::{minimal_primes, text::parse_ideal};
/// let a = parse_ideal("x1, x2*y1", None).unwrap();
/// let p: Vec<String> = minimal_primes(&a).iter().map(|p| p.to_string()).collect();
/// assert_eq!(p, ["(x1, x2)", "(x1, y1)"]);
/// ```
pub fn minimal_primes(a: &MonomialIdeal) -> Vec<MonomialPrime> {
    minimal_primes_with(a, DecompositionStrategy::Splitting)
}

pub fn minimal_primes_with(
    a: &MonomialIdeal,
    strategy: DecompositionStrategy,
) -> Vec<MonomialPrime> {
    primes_of(&a.supports(), strategy)
        .into_iter()
        .map(|s| MonomialPrime::from_support(a.n(), s))
        .collect()
}

/// Intersection of prime ideals given as variable supports.
pub(crate) fn intersect_supports(primes: &[Support]) -> Vec<Support> {
    transversal_frontier(primes)
}

/// Intersects primes of width `n`. The empty list gives the unit ideal.
pub fn intersect_primes(n: usize, primes: &[MonomialPrime]) -> Result<MonomialIdeal> {
    for p in primes {
        if p.n != n {
            return Err(Error::WidthMismatch {
                left: n,
                right: p.n,
            });
        }
    }
    // Validates n.
    MonomialIdeal::zero(n)?;
    let supports: Vec<Support> = primes.iter().map(MonomialPrime::support).collect();
    Ok(MonomialIdeal::from_supports(
        n,
        &intersect_supports(&supports),
    ))
}

/// Removes the primes containing `(x_i, y_i)` for some `i` in `indices`.
pub fn drop_boolean_primes(primes: &[MonomialPrime], indices: IndexSet) -> Vec<MonomialPrime> {
    primes
        .iter()
        .filter(|p| p.pair_indices().intersection(indices).is_empty())
        .copied()
        .collect()
}
