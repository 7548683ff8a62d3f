//! The lattice of antichains of a bounded poset.
//!
//! Antichains are ordered by inclusion of the order filters they
//! generate. Under that order the empty antichain is the bottom, the
//! singleton of the least element is the top, and join and meet have the
//! closed forms implemented here. A second order, by inclusion of
//! generated ideals, serves the image of the complementary map.

use crate::error::{Error, Result};
use crate::poset::{Direction, Extreme, Poset};
use crate::set::{graded_lex, ElementSet};

/// A set of pairwise-incomparable elements of one poset.
///
/// The two trivial antichains are admitted: the empty antichain and the
/// singleton of the least element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antichain(ElementSet);

impl Antichain {
    pub const EMPTY: Antichain = Antichain(ElementSet::EMPTY);

    /// Validates pairwise incomparability.
    pub fn new(p: &Poset, members: ElementSet) -> Result<Antichain> {
        let members = members & p.universe();
        for x in members.iter() {
            for y in members.iter() {
                if x < y && p.comparable(x, y) {
                    return Err(Error::NotAnAntichain(
                        p.name(x).to_string(),
                        p.name(y).to_string(),
                    ));
                }
            }
        }
        Ok(Antichain(members))
    }

    pub fn singleton(id: usize) -> Antichain {
        Antichain(ElementSet::singleton(id))
    }

    /// For callers that guarantee incomparability themselves (extremes of
    /// a subset, enumeration, ...).
    pub(crate) fn new_unchecked(members: ElementSet) -> Antichain {
        Antichain(members)
    }

    pub fn members(self) -> ElementSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Debug for Antichain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Antichain({:?})", self.0)
    }
}

/// The antichain order: `a1 <= a2` iff the filter generated by `a1` is
/// contained in the filter generated by `a2`.
pub fn antichain_leq(p: &Poset, a1: Antichain, a2: Antichain) -> bool {
    p.hull(a1.members(), Direction::Up)
        .is_subset(p.hull(a2.members(), Direction::Up))
}

/// Join: minimal elements of the union.
pub fn antichain_join(p: &Poset, a1: Antichain, a2: Antichain) -> Antichain {
    p.extremes(a1.members() | a2.members(), Extreme::Min)
}

/// Meet: minimal elements of the intersection of the generated filters.
pub fn antichain_meet(p: &Poset, a1: Antichain, a2: Antichain) -> Antichain {
    let common = p.hull(a1.members(), Direction::Up) & p.hull(a2.members(), Direction::Up);
    p.extremes(common, Extreme::Min)
}

/// The ideal-induced order used on the image of the complementary map:
/// `c1 <= c2` iff the ideal generated by `c1` is contained in the ideal
/// generated by `c2`.
pub fn ideal_order_leq(p: &Poset, c1: Antichain, c2: Antichain) -> bool {
    p.hull(c1.members(), Direction::Down)
        .is_subset(p.hull(c2.members(), Direction::Down))
}

/// Upper bound on how many antichains [`enumerate_antichains`] will
/// materialize before giving up.
pub const MAX_ANTICHAINS: usize = 1 << 20;

/// Every antichain of `p`, each exactly once, graded by size and then
/// lexicographic on ascending member ids. The two trivial antichains are
/// included.
pub fn enumerate_antichains(p: &Poset) -> Result<Vec<Antichain>> {
    let n = p.n();
    let mut out: Vec<ElementSet> = Vec::new();
    // Depth-first extension over ascending ids; `compatible` tracks the
    // ids still incomparable to everything chosen so far.
    let mut stack: Vec<(ElementSet, usize)> = vec![(ElementSet::EMPTY, 0)];
    while let Some((chosen, next)) = stack.pop() {
        out.push(chosen);
        if out.len() > MAX_ANTICHAINS {
            return Err(Error::OutOfEnvelope(format!(
                "more than {MAX_ANTICHAINS} antichains"
            )));
        }
        for i in (next..n).rev() {
            if ((p.up_set(i) | p.down_set(i)) & chosen).is_empty() {
                stack.push((chosen.with(i), i + 1));
            }
        }
    }
    out.sort_by(|&a, &b| graded_lex(a, b));
    Ok(out.into_iter().map(Antichain::new_unchecked).collect())
}
