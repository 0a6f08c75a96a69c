use std::fmt;

use fixedbitset::FixedBitSet;

use super::Vertex;

/// A subset of `0..capacity`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(capacity),
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_iter<I: IntoIterator<Item = Vertex>>(capacity: usize, items: I) -> Self {
        let mut set = VertexSet::new(capacity);
        for v in items {
            set.insert(v);
        }
        set
    }

    pub fn singleton(capacity: usize, v: Vertex) -> Self {
        Self::from_iter(capacity, [v])
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) -> bool {
        !self.bits.put(v)
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        self.bits.set(v, false);
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.bits.minimum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
