//! Intersecters, complementers, the blocker map and the complementary
//! map, and the lattice structure of the blocker image.
//!
//! An element `b` is an intersecter for a subset `A` when, for every
//! member of `A` other than the least element, the ideals of `b` and of
//! that member share an atom. Two special cases complete the definition:
//! the empty subset has every element as an intersecter, and the subset
//! `{0}` has none. The blocker of `A` is the antichain of minimal
//! intersecters; the complementary antichain collects the maximal
//! non-intersecters.

use crate::antichain::{antichain_leq, enumerate_antichains, Antichain};
use crate::clutter::minimal_blocking_sets;
use crate::error::{Error, Result};
use crate::map::{validate_map, OrderMap};
use crate::poset::{Direction, Extreme, Poset};
use crate::set::ElementSet;

/// All intersecters for `a` in `p`, by direct scan of the definition.
/// `a` may be any subset; members equal to the least element are skipped
/// by the quantifier.
pub fn intersecters(p: &Poset, a: ElementSet) -> ElementSet {
    let a = a & p.universe();
    if a.is_empty() {
        return p.universe();
    }
    let zero = ElementSet::singleton(p.zero());
    if a == zero {
        return ElementSet::EMPTY;
    }
    let targets = a - zero;
    let mut result = ElementSet::EMPTY;
    for b in p.universe().iter() {
        let b_atoms = p.down_set(b) & p.atoms();
        if targets.iter().all(|t| b_atoms.intersects(p.down_set(t))) {
            result = result.with(b);
        }
    }
    result
}

/// The complement of [`intersecters`] within `p`.
pub fn complementers(p: &Poset, a: ElementSet) -> ElementSet {
    p.universe() - intersecters(p, a)
}

fn require_nonzero_subset(p: &Poset, a: ElementSet) -> Result<ElementSet> {
    let a = a & p.universe();
    if a.is_empty() || a.contains(p.zero()) {
        return Err(Error::HypothesisViolated);
    }
    Ok(a)
}

/// Intersecters as the intersection over `a` of the filters generated by
/// the atoms below each member. Requires a nonempty subset avoiding the
/// least element.
pub fn intersecters_by_filter_formula(p: &Poset, a: ElementSet) -> Result<ElementSet> {
    let a = require_nonzero_subset(p, a)?;
    let mut acc = p.universe();
    for x in a.iter() {
        acc = acc & p.hull(p.down_set(x) & p.atoms(), Direction::Up);
    }
    Ok(acc)
}

/// Intersecters through the classical route: take the family of
/// atom-sets below the members of `a`, dualize it with the clutter
/// blocker, and collect the filter intersections its members generate.
pub fn intersecters_by_clutter_formula(p: &Poset, a: ElementSet) -> Result<ElementSet> {
    let a = require_nonzero_subset(p, a)?;
    let family: Vec<ElementSet> = a.iter().map(|x| p.down_set(x) & p.atoms()).collect();
    let dual = minimal_blocking_sets(p.atoms(), &family);
    let mut acc = ElementSet::EMPTY;
    for transversal in dual {
        let mut filters = p.universe();
        for e in transversal.iter() {
            filters = filters & p.up_set(e);
        }
        acc = acc | filters;
    }
    Ok(acc)
}

/// The blocker map: minimal intersecters, as a canonical antichain.
pub fn blocker(p: &Poset, a: ElementSet) -> Antichain {
    p.extremes(intersecters(p, a), Extreme::Min)
}

/// The complementary map: maximal complementers.
pub fn complementary(p: &Poset, a: ElementSet) -> Antichain {
    p.extremes(complementers(p, a), Extreme::Max)
}

/// The image of the antichain lattice under the blocker map, together
/// with the induced order and the full preimage of every image member.
#[derive(Clone, Debug)]
pub struct BlockerImage {
    poset: Poset,
    blockers: Vec<Antichain>,
    /// order[i][j] is `B_i <= B_j` in the antichain order.
    order: Vec<Vec<bool>>,
    preimages: Vec<Vec<Antichain>>,
}

/// Computes the image under an arbitrary antichain-valued map; the
/// verification suites use this to run the same bookkeeping over
/// deliberately corrupted blocker maps.
pub fn blocker_image_with(
    p: &Poset,
    mut beta: impl FnMut(&Poset, ElementSet) -> Antichain,
) -> Result<BlockerImage> {
    let all = enumerate_antichains(p)?;
    let assignments: Vec<(Antichain, Antichain)> =
        all.iter().map(|&a| (beta(p, a.members()), a)).collect();
    let mut blockers: Vec<Antichain> = assignments.iter().map(|&(b, _)| b).collect();
    blockers.sort_by(|a, b| crate::set::graded_lex(a.members(), b.members()));
    blockers.dedup();
    let preimages = blockers
        .iter()
        .map(|&b| {
            assignments
                .iter()
                .filter(|&&(img, _)| img == b)
                .map(|&(_, a)| a)
                .collect()
        })
        .collect();
    let order = blockers
        .iter()
        .map(|&bi| {
            blockers
                .iter()
                .map(|&bj| antichain_leq(p, bi, bj))
                .collect()
        })
        .collect();
    Ok(BlockerImage {
        poset: p.clone(),
        blockers,
        order,
        preimages,
    })
}

/// Enumerates every antichain, applies the blocker map, and organizes
/// the deduplicated image.
pub fn blocker_image(p: &Poset) -> Result<BlockerImage> {
    blocker_image_with(p, blocker)
}

impl BlockerImage {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Image members in canonical order (graded by size, then
    /// lexicographic).
    pub fn blockers(&self) -> &[Antichain] {
        &self.blockers
    }

    pub fn len(&self) -> usize {
        self.blockers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blockers.is_empty()
    }

    pub fn index_of(&self, b: Antichain) -> Option<usize> {
        self.blockers.iter().position(|&x| x == b)
    }

    pub fn contains(&self, b: Antichain) -> bool {
        self.index_of(b).is_some()
    }

    /// Antichains mapping onto the `idx`-th image member, in enumeration
    /// order.
    pub fn preimage(&self, idx: usize) -> &[Antichain] {
        &self.preimages[idx]
    }

    pub fn preimage_of(&self, b: Antichain) -> Option<&[Antichain]> {
        self.index_of(b).map(|i| self.preimage(i))
    }

    /// The image order, i.e. the antichain order restricted to image
    /// members.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i][j]
    }

    fn require_member(&self, b: Antichain) -> Result<usize> {
        self.index_of(b).ok_or_else(|| {
            Error::NotABlocker(format!("{:?}", b.members().iter().collect::<Vec<_>>()))
        })
    }

    /// Meet inside the blocker lattice; it coincides with the antichain
    /// meet, which the image is closed under.
    pub fn meet(&self, b1: Antichain, b2: Antichain) -> Result<Antichain> {
        self.require_member(b1)?;
        self.require_member(b2)?;
        Ok(crate::antichain::antichain_meet(&self.poset, b1, b2))
    }

    /// Join inside the blocker lattice: blocker of the antichain meet of
    /// the two members' blockers.
    pub fn join(&self, b1: Antichain, b2: Antichain) -> Result<Antichain> {
        self.require_member(b1)?;
        self.require_member(b2)?;
        let m = crate::antichain::antichain_meet(
            &self.poset,
            blocker(&self.poset, b1.members()),
            blocker(&self.poset, b2.members()),
        );
        Ok(blocker(&self.poset, m.members()))
    }

    /// Image members covering the bottom of the image order.
    pub fn image_atoms(&self) -> Vec<usize> {
        let Some(bottom) = self.index_of(Antichain::EMPTY) else {
            return Vec::new();
        };
        (0..self.len())
            .filter(|&i| self.covers(bottom, i))
            .collect()
    }

    /// Image members covered by the top of the image order.
    pub fn image_coatoms(&self) -> Vec<usize> {
        let Some(top) = self.index_of(Antichain::singleton(self.poset.zero())) else {
            return Vec::new();
        };
        (0..self.len()).filter(|&i| self.covers(i, top)).collect()
    }

    fn strict(&self, i: usize, j: usize) -> bool {
        i != j && self.order[i][j]
    }

    /// Cover relation of the image order: `i < j` with nothing strictly
    /// between.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.strict(i, j) && (0..self.len()).all(|k| !(self.strict(i, k) && self.strict(k, j)))
    }
}

/// Pushes the intersecters of `a1` through a certified map and asks
/// whether they land inside the intersecters of the image of `a1`.
/// Returns an error unless both certificate clauses hold.
pub fn map_preserves_intersecters(m: &OrderMap, a1: ElementSet) -> Result<bool> {
    let cert = validate_map(m);
    if !cert.holds() {
        return Err(Error::UnsafeMap(format!(
            "order_preserving={}, zero_safe={}",
            cert.order_preserving, cert.zero_safe
        )));
    }
    let lhs = m.apply_set(intersecters(m.source(), a1));
    let rhs = intersecters(m.target(), m.apply_set(a1));
    Ok(lhs.is_subset(rhs))
}
