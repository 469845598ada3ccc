//! Fixed-capacity membership sets over element indices.

use std::cmp::Ordering;
use std::fmt;

const WORDS: usize = 4;

/// Largest number of elements any poset in this crate may have.
pub const CAPACITY: usize = WORDS * 64;

/// A set of element indices below [`CAPACITY`], stored as a 256-bit mask.
///
/// `Ord` is the canonical antichain order: lexicographic on the sorted list
/// of members, so `{} < {0} < {0, 1} < {0, 2} < {1}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: [u64; WORDS],
}

impl ElementSet {
    pub const fn new() -> Self {
        ElementSet { words: [0; WORDS] }
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= CAPACITY, "element index out of capacity");
        let mut s = ElementSet::new();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = ElementSet::new();
        s.insert(x);
        s
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < CAPACITY, "element index out of capacity");
        self.words[x / 64] |= 1 << (x % 64);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        if x < CAPACITY {
            self.words[x / 64] &= !(1 << (x % 64));
        }
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < CAPACITY && self.words[x / 64] & (1 << (x % 64)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words) {
            *a |= b;
        }
        out
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words) {
            *a &= b;
        }
        out
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words) {
            *a &= !b;
        }
        out
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words).all(|(a, b)| a & !b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Whether some member is strictly greater than `x`.
    fn has_member_above(&self, x: usize) -> bool {
        let w = x / 64;
        let bit = x % 64;
        let mask = if bit == 63 { 0 } else { u64::MAX << (bit + 1) };
        if self.words[w] & mask != 0 {
            return true;
        }
        self.words[w + 1..].iter().any(|&v| v != 0)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::new();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for &ElementSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        // The lowest differing index decides: whichever set holds it is
        // smaller, unless the other set is exhausted at that point (prefix).
        let diff = (0..WORDS)
            .find(|&w| self.words[w] != other.words[w])
            .map(|w| w * 64 + (self.words[w] ^ other.words[w]).trailing_zeros() as usize);
        match diff {
            None => Ordering::Equal,
            Some(p) if self.contains(p) => {
                if other.has_member_above(p) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            Some(p) => {
                if self.has_member_above(p) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_len() {
        assert_eq!(ElementSet::full(0).len(), 0);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(ElementSet::full(130).len(), 130);
        assert_eq!(ElementSet::full(CAPACITY).len(), CAPACITY);
        assert!(ElementSet::full(130).contains(129));
        assert!(!ElementSet::full(130).contains(130));
    }

    #[test]
    fn canonical_order_small_cases() {
        let s = |v: &[usize]| v.iter().copied().collect::<ElementSet>();
        let mut sets = vec![s(&[1]), s(&[0, 2]), s(&[]), s(&[0, 1]), s(&[0]), s(&[70])];
        sets.sort();
        assert_eq!(
            sets,
            vec![s(&[]), s(&[0]), s(&[0, 1]), s(&[0, 2]), s(&[1]), s(&[70])]
        );
    }

    proptest! {
        #[test]
        fn order_matches_sorted_vec_order(
            a in proptest::collection::btree_set(0usize..200, 0..8),
            b in proptest::collection::btree_set(0usize..200, 0..8),
        ) {
            let sa: ElementSet = a.iter().copied().collect();
            let sb: ElementSet = b.iter().copied().collect();
            let va: Vec<usize> = a.into_iter().collect();
            let vb: Vec<usize> = b.into_iter().collect();
            prop_assert_eq!(sa.cmp(&sb), va.cmp(&vb));
            prop_assert_eq!(sa.to_vec(), va);
        }
    }
}
