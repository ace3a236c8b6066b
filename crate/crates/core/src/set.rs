//! Dense bitset over group element indices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A set of element indices `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn new(universe: usize) -> Self {
        ElementSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn from_iter_in(universe: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(universe);
        for x in items {
            s.insert(x);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.universe, "element {x} out of range {}", self.universe);
        let (w, b) = (x / 64, x % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        ElementSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
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

    #[test]
    fn basic_ops() {
        let a = ElementSet::from_iter_in(130, [0, 5, 64, 129]);
        let b = ElementSet::from_iter_in(130, [5, 129, 7]);
        assert_eq!(a.len(), 4);
        assert!(a.contains(64) && !a.contains(63) && !a.contains(500));
        assert_eq!(a.intersection(&b).to_vec(), vec![5, 129]);
        assert!(ElementSet::from_iter_in(130, [5, 129]).is_subset(&a));
        assert!(!b.is_subset(&a));
        let mut c = a.clone();
        c.union_with(&b);
        assert_eq!(c.to_vec(), vec![0, 5, 7, 64, 129]);
    }
}
