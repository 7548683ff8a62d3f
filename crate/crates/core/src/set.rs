//! Dense sets of poset elements, stored as 64-bit masks.
//!
//! Element ids are bit positions, which caps every poset at
//! [`MAX_ELEMENTS`] elements and makes the order queries used throughout
//! the crate single word operations.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Hard cap on poset size; element ids index bits of a `u64`.
pub const MAX_ELEMENTS: usize = 64;

/// A set of element ids of one poset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn singleton(id: usize) -> ElementSet {
        debug_assert!(id < MAX_ELEMENTS);
        ElementSet(1 << id)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> ElementSet {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> ElementSet {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, id: usize) -> bool {
        id < MAX_ELEMENTS && self.0 & (1 << id) != 0
    }

    #[must_use]
    pub fn with(self, id: usize) -> ElementSet {
        debug_assert!(id < MAX_ELEMENTS);
        ElementSet(self.0 | (1 << id))
    }

    #[must_use]
    pub fn without(self, id: usize) -> ElementSet {
        debug_assert!(id < MAX_ELEMENTS);
        ElementSet(self.0 & !(1 << id))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: ElementSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in ascending id order.
    pub fn iter(self) -> Ids {
        Ids(self.0)
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

/// Set difference.
impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> ElementSet {
        let mut s = ElementSet::EMPTY;
        for id in iter {
            s = s.with(id);
        }
        s
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Ids;
    fn into_iter(self) -> Ids {
        self.iter()
    }
}

pub struct Ids(u64);

impl Iterator for Ids {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let id = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(id)
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Orders sets by cardinality, then lexicographically on the ascending
/// member lists. This is the canonical collation for antichains and
/// clutter members everywhere in the crate.
pub fn graded_lex(a: ElementSet, b: ElementSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        // Equal-size sets: the one containing the smallest differing id
        // has the lexicographically smaller ascending member list.
        let diff = a.bits() ^ b.bits();
        if diff == 0 {
            std::cmp::Ordering::Equal
        } else {
            let lowest = diff & diff.wrapping_neg();
            if a.bits() & lowest != 0 {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        }
    })
}
