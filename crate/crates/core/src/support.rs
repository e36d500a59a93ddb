//! Word-parallel variable sets over x, y and z placeholder variables.
//!
//! Every algorithm that only cares about divisibility between squarefree
//! monomials (decomposition, intersection, reduction) runs on `Support`. The
//! public value types convert into it at the module boundary.

use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Support {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl Support {
    pub const ONE: Support = Support { x: 0, y: 0, z: 0 };

    pub fn new(x: u64, y: u64, z: u64) -> Self {
        Support { x, y, z }
    }

    pub fn is_one(self) -> bool {
        self.x | self.y | self.z == 0
    }

    pub fn degree(self) -> u32 {
        self.x.count_ones() + self.y.count_ones() + self.z.count_ones()
    }

    pub fn union(self, other: Support) -> Support {
        Support {
            x: self.x | other.x,
            y: self.y | other.y,
            z: self.z | other.z,
        }
    }

    /// Support containment, i.e. monomial divisibility.
    pub fn divides(self, other: Support) -> bool {
        self.x & !other.x == 0 && self.y & !other.y == 0 && self.z & !other.z == 0
    }

    pub fn intersects(self, other: Support) -> bool {
        self.x & other.x != 0 || self.y & other.y != 0 || self.z & other.z != 0
    }

    /// Bitmask of indices `i` with `x_i * y_i` dividing this monomial.
    pub fn pairs(self) -> u64 {
        self.x & self.y
    }

    pub fn is_boolean_free(self) -> bool {
        self.pairs() == 0
    }

    /// Bitmask of indices `i` with `x_i | self, y_i | other` or the reverse.
    pub fn shared(self, other: Support) -> u64 {
        (self.x & other.y) | (self.y & other.x)
    }

    /// The lowest variable in the order x_1 < .. < x_n < y_1 < .. < z_1 < ..
    pub fn lowest_var(self) -> Option<Support> {
        if self.x != 0 {
            Some(Support::new(self.x & self.x.wrapping_neg(), 0, 0))
        } else if self.y != 0 {
            Some(Support::new(0, self.y & self.y.wrapping_neg(), 0))
        } else if self.z != 0 {
            Some(Support::new(0, 0, self.z & self.z.wrapping_neg()))
        } else {
            None
        }
    }

    pub fn without(self, other: Support) -> Support {
        Support {
            x: self.x & !other.x,
            y: self.y & !other.y,
            z: self.z & !other.z,
        }
    }

    /// Single-variable supports, ascending in the display order.
    pub fn vars(self) -> impl Iterator<Item = Support> {
        bits(self.x)
            .map(|b| Support::new(b, 0, 0))
            .chain(bits(self.y).map(|b| Support::new(0, b, 0)))
            .chain(bits(self.z).map(|b| Support::new(0, 0, b)))
    }

    /// Ranks of the variables: x_i -> i-1, y_i -> 64+i-1, z_j -> 128+j-1.
    fn ranks(self) -> impl Iterator<Item = u32> {
        ones(self.x)
            .chain(ones(self.y).map(|r| r + 64))
            .chain(ones(self.z).map(|r| r + 128))
    }

    /// Total degree first, then lexicographic comparison of the variable lists.
    pub fn display_cmp(&self, other: &Support) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.ranks().cmp(other.ranks()))
    }
}

fn bits(mut word: u64) -> impl Iterator<Item = u64> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let low = word & word.wrapping_neg();
            word ^= low;
            Some(low)
        }
    })
}

fn ones(word: u64) -> impl Iterator<Item = u32> {
    bits(word).map(u64::trailing_zeros)
}

/// Sorts into display order, removes duplicates and strict multiples.
pub(crate) fn minimalize(gens: &mut Vec<Support>) {
    gens.sort_by(Support::display_cmp);
    gens.dedup();
    let mut kept: Vec<Support> = Vec::with_capacity(gens.len());
    for &g in gens.iter() {
        // Sorted by degree, so only earlier entries can divide `g`.
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g);
        }
    }
    *gens = kept;
}

/// Intersection of ideals generated by variable sets (primes), or dually the
/// minimal transversals of a hypergraph whose edges are `edges`.
///
/// Maintains the divisibility-minimal frontier of LCMs of one variable per
/// processed edge. An empty edge (the zero prime) empties the frontier.
pub(crate) fn transversal_frontier<'a>(
    edges: impl IntoIterator<Item = &'a Support>,
) -> Vec<Support> {
    let mut frontier = vec![Support::ONE];
    for &edge in edges {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for &m in &frontier {
            if m.intersects(edge) {
                next.push(m);
            } else {
                next.extend(edge.vars().map(|v| m.union(v)));
            }
        }
        minimalize(&mut next);
        frontier = next;
    }
    frontier
}
