//! Finite bounded posets with a dense bitset order relation.
//!
//! A poset is built once (from cover relations or by a product
//! constructor), validated, and never mutated afterwards. Order queries,
//! generated ideals and filters, and minimal/maximal reductions are all
//! mask operations on precomputed rows.

use crate::antichain::Antichain;
use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// Closure direction for [`Poset::hull`]: order ideal or order filter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Down,
    Up,
}

/// Which extreme [`Poset::extremes`] keeps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Extreme {
    Min,
    Max,
}

/// Factor selection for product projections.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Factor {
    First,
    Second,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum ProductKind {
    Full,
    Reduced,
}

/// Coordinate bookkeeping kept by the product constructors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct ProductInfo {
    pub kind: ProductKind,
    pub factors: Box<(Poset, Poset)>,
    /// Factor coordinates per element; `None` only for the two bounds a
    /// reduced product adjoins.
    pub pairs: Vec<Option<(usize, usize)>>,
}

/// A finite bounded poset: distinct labels, a reflexive-transitive
/// order relation, and cached least element, greatest element and atoms.
#[derive(Clone, Debug)]
pub struct Poset {
    names: Vec<String>,
    /// up[x] = { y : x <= y }
    up: Vec<ElementSet>,
    /// down[x] = { y : y <= x }
    down: Vec<ElementSet>,
    zero: usize,
    one: usize,
    atoms: ElementSet,
    pub(crate) product: Option<ProductInfo>,
}

/// Equality is the labeled order itself; the cached bounds and atoms are
/// derived from it, and product bookkeeping does not survive round trips
/// through cover relations on purpose.
impl PartialEq for Poset {
    fn eq(&self, other: &Poset) -> bool {
        self.names == other.names && self.up == other.up
    }
}

impl Eq for Poset {}

fn transitive_closure(up: &mut [ElementSet]) {
    let n = up.len();
    for k in 0..n {
        for i in 0..n {
            if up[i].contains(k) {
                up[i] = up[i] | up[k];
            }
        }
    }
}

impl Poset {
    /// Builds a poset from its element labels and a list of `(lower,
    /// upper)` relation pairs; the reflexive-transitive closure of the
    /// pairs becomes the order. The input does not have to be an
    /// irredundant Hasse diagram.
    pub fn from_cover_relations(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
        let n = names.len();
        if n < 2 {
            return Err(Error::TooSmall);
        }
        let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for &(lo, hi) in covers {
            let bad = lo.max(hi);
            if bad >= n {
                return Err(Error::BadCover {
                    found: bad,
                    count: n,
                });
            }
            up[lo] = up[lo].with(hi);
        }
        transitive_closure(&mut up);
        Poset::from_leq_masks(names, up, None)
    }

    /// Shared validation and caching behind every constructor. `up` must
    /// already be reflexive and transitive.
    pub(crate) fn from_leq_masks(
        names: Vec<String>,
        up: Vec<ElementSet>,
        product: Option<ProductInfo>,
    ) -> Result<Poset> {
        let n = names.len();
        if n < 2 {
            return Err(Error::TooSmall);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::OutOfEnvelope(format!(
                "poset has {n} elements, the dense representation caps out at {MAX_ELEMENTS}"
            )));
        }
        debug_assert_eq!(up.len(), n);
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        let universe = ElementSet::full(n);
        for (i, row) in up.iter().enumerate() {
            debug_assert!(row.contains(i), "relation must be reflexive");
            debug_assert!(row.is_subset(universe));
        }
        // Antisymmetry: mutual comparability of distinct elements means
        // the input relation contained a cycle.
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::Cycle(names[i].clone(), names[j].clone()));
                }
                debug_assert!(up[j].is_subset(*row), "relation must be transitive");
            }
        }
        let mut down = vec![ElementSet::EMPTY; n];
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j] = down[j].with(i);
            }
        }
        let minimals: Vec<usize> = (0..n)
            .filter(|&x| down[x] == ElementSet::singleton(x))
            .collect();
        let maximals: Vec<usize> = (0..n)
            .filter(|&x| up[x] == ElementSet::singleton(x))
            .collect();
        if minimals.len() != 1 || maximals.len() != 1 {
            let list = |ids: &[usize]| {
                ids.iter()
                    .map(|&x| names[x].as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            return Err(Error::NotBounded(format!(
                "minimal elements {{{}}}, maximal elements {{{}}}",
                list(&minimals),
                list(&maximals)
            )));
        }
        let zero = minimals[0];
        let one = maximals[0];
        let atoms = (0..n)
            .filter(|&x| x != zero && down[x] == ElementSet::singleton(x).with(zero))
            .collect();
        Ok(Poset {
            names,
            up,
            down,
            zero,
            one,
            atoms,
            product,
        })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    /// Id of the least element.
    pub fn zero(&self) -> usize {
        self.zero
    }

    /// Id of the greatest element.
    pub fn one(&self) -> usize {
        self.one
    }

    /// The elements covering the least element.
    pub fn atoms(&self) -> ElementSet {
        self.atoms
    }

    pub fn universe(&self) -> ElementSet {
        ElementSet::full(self.n())
    }

    /// The order relation: `x <= y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{ y : x <= y }`
    pub fn up_set(&self, x: usize) -> ElementSet {
        self.up[x]
    }

    /// `{ y : y <= x }`
    pub fn down_set(&self, x: usize) -> ElementSet {
        self.down[x]
    }

    /// The order ideal (down) or order filter (up) generated by `xs`.
    pub fn hull(&self, xs: ElementSet, dir: Direction) -> ElementSet {
        let mut acc = ElementSet::EMPTY;
        for x in (xs & self.universe()).iter() {
            acc = acc
                | match dir {
                    Direction::Down => self.down[x],
                    Direction::Up => self.up[x],
                };
        }
        acc
    }

    /// Minimal or maximal elements of a subset; the result is always an
    /// antichain.
    pub fn extremes(&self, xs: ElementSet, which: Extreme) -> Antichain {
        let xs = xs & self.universe();
        let mut keep = ElementSet::EMPTY;
        for x in xs.iter() {
            let dominated = match which {
                Extreme::Min => self.down[x],
                Extreme::Max => self.up[x],
            } & xs;
            if dominated == ElementSet::singleton(x) {
                keep = keep.with(x);
            }
        }
        Antichain::new_unchecked(keep)
    }

    /// True iff the members of `xs` are pairwise incomparable.
    pub fn is_antichain(&self, xs: ElementSet) -> bool {
        let xs = xs & self.universe();
        xs.iter()
            .all(|x| ((self.up[x] | self.down[x]) & xs) == ElementSet::singleton(x))
    }

    /// The cover relation (Hasse diagram edges), as `(lower, upper)`
    /// pairs in ascending order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for x in 0..self.n() {
            let strictly_above = self.up[x].without(x);
            for y in strictly_above.iter() {
                // y covers x iff nothing sits strictly between them.
                if (self.down[y] & strictly_above) == ElementSet::singleton(y) {
                    edges.push((x, y));
                }
            }
        }
        edges
    }

    /// The induced subposet on `keep`, which must contain the bounds.
    /// Returns the restriction and the old-id -> new-id mapping.
    pub(crate) fn restrict(&self, keep: ElementSet) -> (Poset, Vec<Option<usize>>) {
        assert!(keep.contains(self.zero) && keep.contains(self.one));
        let kept: Vec<usize> = keep.iter().collect();
        let mut old_to_new = vec![None; self.n()];
        for (new, &old) in kept.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let names = kept.iter().map(|&old| self.names[old].clone()).collect();
        let up = kept
            .iter()
            .map(|&old| {
                (self.up[old] & keep)
                    .iter()
                    .map(|o| old_to_new[o].unwrap())
                    .collect()
            })
            .collect();
        let restricted = Poset::from_leq_masks(names, up, None)
            .expect("a restriction keeping both bounds stays a bounded poset");
        (restricted, old_to_new)
    }
}
