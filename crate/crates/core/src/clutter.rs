//! Classical blocking-set machinery: clutters (Sperner families), their
//! blockers, Boolean lattices, and the dictionary between clutters over a
//! ground set and antichains of the corresponding Boolean lattice.

use crate::antichain::Antichain;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::{graded_lex, ElementSet};

/// Largest ground-set size the exhaustive blocker scan accepts.
pub const MAX_GROUND: usize = 12;

/// A Sperner family of subsets of `{1, ..., ground_size}`, kept in
/// canonical order (by size, then lexicographic). Members are bitmasks
/// with element `k` at bit `k - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clutter {
    ground_size: usize,
    sets: Vec<ElementSet>,
}

impl Clutter {
    pub fn new(ground_size: usize, mut sets: Vec<ElementSet>) -> Result<Clutter> {
        if ground_size > MAX_GROUND {
            return Err(Error::OutOfEnvelope(format!(
                "ground set of size {ground_size}, the exhaustive blocker scan caps at {MAX_GROUND}"
            )));
        }
        let ground = ElementSet::full(ground_size);
        for &s in &sets {
            if !s.is_subset(ground) {
                return Err(Error::BadSubset(format!(
                    "member {:?} leaves ground {{1..{ground_size}}}",
                    s
                )));
            }
        }
        sets.sort_by(|&a, &b| graded_lex(a, b));
        sets.dedup();
        for (i, &a) in sets.iter().enumerate() {
            for &b in &sets[i + 1..] {
                if a.is_subset(b) {
                    return Err(Error::NotSperner(format!("{b:?}"), format!("{a:?}")));
                }
            }
        }
        Ok(Clutter { ground_size, sets })
    }

    /// The empty clutter over a ground set.
    pub fn empty(ground_size: usize) -> Clutter {
        Clutter {
            ground_size,
            sets: Vec::new(),
        }
    }

    /// The other trivial clutter, whose only member is the empty set.
    pub fn trivial_empty_member(ground_size: usize) -> Clutter {
        Clutter {
            ground_size,
            sets: vec![ElementSet::EMPTY],
        }
    }

    /// Sperner reduction of an arbitrary family: keep the inclusion-wise
    /// minimal members.
    pub fn from_family(ground_size: usize, family: &[ElementSet]) -> Result<Clutter> {
        let minimal: Vec<ElementSet> = family
            .iter()
            .copied()
            .filter(|&s| !family.iter().any(|&t| t != s && t.is_subset(s)))
            .collect();
        Clutter::new(ground_size, minimal)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// The blocker: all inclusion-wise minimal blocking sets. Total on
    /// clutters; on the trivial clutters it swaps the empty clutter and
    /// the clutter `{{}}`, consistently with the vacuous reading of the
    /// blocking-set condition.
    pub fn blocker(&self) -> Clutter {
        if self.sets.is_empty() {
            return Clutter::trivial_empty_member(self.ground_size);
        }
        if self.sets.contains(&ElementSet::EMPTY) {
            // Sperner forces this to be {{}}: nothing can meet the empty
            // member, so there are no blocking sets at all.
            return Clutter::empty(self.ground_size);
        }
        let sets = minimal_blocking_sets(ElementSet::full(self.ground_size), &self.sets);
        Clutter {
            ground_size: self.ground_size,
            sets,
        }
    }
}

/// Inclusion-wise minimal sets `H` within `ground` meeting every member
/// of `family`. The family must be nonempty with nonempty members; the
/// scan is exhaustive over all subsets of `ground`.
pub fn minimal_blocking_sets(ground: ElementSet, family: &[ElementSet]) -> Vec<ElementSet> {
    assert!(!family.is_empty() && family.iter().all(|s| !s.is_empty()));
    assert!(
        ground.len() <= MAX_GROUND + 8,
        "exhaustive scan over 2^{}",
        ground.len()
    );
    let positions: Vec<usize> = ground.iter().collect();
    let mut candidates: Vec<ElementSet> = (0..1u64 << positions.len())
        .map(|compressed| {
            positions
                .iter()
                .enumerate()
                .filter(|(bit, _)| compressed >> bit & 1 == 1)
                .map(|(_, &id)| id)
                .collect()
        })
        .collect();
    candidates.sort_by(|&a, &b| graded_lex(a, b));
    // Ascending by size, so every blocking set already seen is a witness
    // of non-minimality for the current candidate.
    let mut minimal: Vec<ElementSet> = Vec::new();
    for h in candidates {
        if family.iter().all(|&g| h.intersects(g)) && !minimal.iter().any(|&m| m.is_subset(h)) {
            minimal.push(h);
        }
    }
    minimal
}

/// The blocking-set predicate itself: does `h` meet every member of the
/// family? Defined only for nonempty families of nonempty sets.
pub fn is_blocking_set(h: ElementSet, family: &[ElementSet]) -> Result<bool> {
    if family.is_empty() || family.iter().any(|s| s.is_empty()) {
        return Err(Error::HypothesisViolated);
    }
    Ok(family.iter().all(|&g| h.intersects(g)))
}

/// Largest exponent for [`boolean_lattice`].
pub const MAX_BOOLEAN: usize = 4;

/// The lattice of all subsets of `{1, ..., n}` under inclusion. Element
/// ids equal the subset masks, so id 0 is the least element and id
/// `2^n - 1` the greatest; atoms are the singletons.
pub fn boolean_lattice(n: usize) -> Result<Poset> {
    if n == 0 || n > MAX_BOOLEAN {
        return Err(Error::OutOfEnvelope(format!(
            "boolean lattice exponent {n} outside 1..={MAX_BOOLEAN}"
        )));
    }
    let size = 1usize << n;
    let names = (0..size).map(|mask| subset_label(mask as u64)).collect();
    let up = (0..size as u64)
        .map(|mask| {
            (0..size as u64)
                .filter(|&other| mask & !other == 0)
                .map(|other| other as usize)
                .collect()
        })
        .collect();
    Poset::from_leq_masks(names, up, None)
}

fn subset_label(mask: u64) -> String {
    if mask == 0 {
        return "0".to_string();
    }
    ElementSet::from_bits(mask)
        .iter()
        .map(|bit| (bit + 1).to_string())
        .collect()
}

/// Clutter members denote Boolean-lattice elements directly: the member
/// mask is the element id. Sperner families map exactly onto antichains.
pub fn antichain_from_clutter(n: usize, g: &Clutter) -> Result<Antichain> {
    if g.ground_size() != n {
        return Err(Error::BadSubset(format!(
            "clutter ground {} does not match lattice exponent {n}",
            g.ground_size()
        )));
    }
    let lattice = boolean_lattice(n)?;
    let members: ElementSet = g.sets().iter().map(|s| s.bits() as usize).collect();
    Antichain::new(&lattice, members)
}

/// Inverse direction of [`antichain_from_clutter`].
pub fn clutter_from_antichain(n: usize, a: Antichain) -> Result<Clutter> {
    if n == 0 || n > MAX_BOOLEAN {
        return Err(Error::OutOfEnvelope(format!(
            "boolean lattice exponent {n} outside 1..={MAX_BOOLEAN}"
        )));
    }
    let sets = a
        .members()
        .iter()
        .map(|id| ElementSet::from_bits(id as u64))
        .collect();
    Clutter::new(n, sets)
}
