//! Dense bitsets over the element ids of one finite ring.

use std::cmp::Ordering;
use std::fmt;

use crate::ring::Elem;

/// A subset of `0..universe`, stored as a bitset.
///
/// Sets order by cardinality first and then lexicographically on the sorted
/// member list, which is the canonical listing order for ideals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet { universe, words: vec![0; universe.div_ceil(64)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for e in 0..universe {
            s.insert(e);
        }
        s
    }

    pub fn from_iter_in(universe: usize, items: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = Self::empty(universe);
        for e in items {
            s.insert(e);
        }
        s
    }

    pub fn singleton(universe: usize, e: Elem) -> Self {
        Self::from_iter_in(universe, [e])
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Inserts `e`, returning whether it was new.
    pub fn insert(&mut self, e: Elem) -> bool {
        assert!(e < self.universe, "element {e} outside universe {}", self.universe);
        let (w, b) = (e / 64, e % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, e: Elem) {
        if e < self.universe {
            self.words[e / 64] &= !(1 << (e % 64));
        }
    }

    pub fn contains(&self, e: Elem) -> bool {
        e < self.universe && self.words[e / 64] & (1 << (e % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.universe).filter(move |&e| self.contains(e))
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        ElemSet { universe: self.universe, words }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        ElemSet { universe: self.universe, words }
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        ElemSet { universe: self.universe, words }
    }

    pub fn complement(&self) -> ElemSet {
        ElemSet::full(self.universe).difference(self)
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
