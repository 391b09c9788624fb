//! Fixed-universe vertex sets backed by `u64` words.

use std::fmt;

use crate::graph::VertexId;

const WORD_BITS: usize = 64;

/// A subset of `{0, .., universe}` stored as a dense bit-vector.
///
/// Two sets compare equal only when they have the same universe and the same
/// members, so a `VertexSet` can be used directly as a hash-map key.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::new(universe);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.clear_tail();
        set
    }

    pub fn from_ids<I: IntoIterator<Item = VertexId>>(universe: usize, ids: I) -> Self {
        let mut set = Self::new(universe);
        for id in ids {
            set.insert(id);
        }
        set
    }

    fn clear_tail(&mut self) {
        let rem = self.universe % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Inserts `id`, returning `true` if it was not already present.
    ///
    /// Panics if `id` lies outside the universe.
    #[inline]
    pub fn insert(&mut self, id: VertexId) -> bool {
        assert!(id < self.universe, "vertex {id} outside universe {}", self.universe);
        let (w, b) = (id / WORD_BITS, id % WORD_BITS);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, id: VertexId) -> bool {
        if id >= self.universe {
            return false;
        }
        let (w, b) = (id / WORD_BITS, id % WORD_BITS);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, id: VertexId) -> bool {
        id < self.universe && self.words[id / WORD_BITS] >> (id % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn symmetric_difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<VertexId> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn full_respects_universe() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(!s.contains(70));
        assert_eq!(s.iter().last(), Some(69));
        assert!(VertexSet::full(0).is_empty());
    }

    #[test]
    fn insert_remove() {
        let mut s = VertexSet::new(130);
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert!(s.insert(0));
        assert_eq!(s.to_vec(), vec![0, 129]);
        assert!(s.remove(0));
        assert!(!s.remove(0));
        assert!(!s.remove(500));
        assert_eq!(s.len(), 1);
    }

    #[test]
    #[should_panic]
    fn insert_out_of_range_panics() {
        VertexSet::new(4).insert(4);
    }

    proptest! {
        #[test]
        fn matches_btreeset(a in proptest::collection::btree_set(0usize..200, 0..60),
                            b in proptest::collection::btree_set(0usize..200, 0..60)) {
            let sa = VertexSet::from_ids(200, a.iter().copied());
            let sb = VertexSet::from_ids(200, b.iter().copied());
            prop_assert_eq!(sa.to_vec(), a.iter().copied().collect::<Vec<_>>());

            let mut u = sa.clone();
            u.union_with(&sb);
            prop_assert_eq!(u.to_vec(), a.union(&b).copied().collect::<Vec<_>>());

            let mut i = sa.clone();
            i.intersect_with(&sb);
            let inter: BTreeSet<_> = a.intersection(&b).copied().collect();
            prop_assert_eq!(i.to_vec(), inter.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.intersection_len(&sb), inter.len());
            prop_assert_eq!(sa.intersects(&sb), !inter.is_empty());

            let mut d = sa.clone();
            d.difference_with(&sb);
            prop_assert_eq!(d.to_vec(), a.difference(&b).copied().collect::<Vec<_>>());

            let mut x = sa.clone();
            x.symmetric_difference_with(&sb);
            prop_assert_eq!(x.to_vec(), a.symmetric_difference(&b).copied().collect::<Vec<_>>());

            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        }
    }
}
