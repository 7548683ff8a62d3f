//! Maps between bounded posets and the certificate they need before the
//! intersecter-image inclusion may be applied.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::ElementSet;

/// A function between two posets, given as one target id per source id.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderMap {
    source: Poset,
    target: Poset,
    image: Vec<usize>,
}

/// What [`validate_map`] reports: order preservation, and the zero-safety
/// clause (least element maps to least element, everything else maps
/// strictly above it).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MapCertificate {
    pub order_preserving: bool,
    pub zero_safe: bool,
}

impl MapCertificate {
    pub fn holds(self) -> bool {
        self.order_preserving && self.zero_safe
    }
}

impl OrderMap {
    /// Only well-formedness is checked here; use [`validate_map`] for the
    /// semantic certificate.
    pub fn new(source: Poset, target: Poset, image: Vec<usize>) -> Result<OrderMap> {
        if image.len() != source.n() {
            return Err(Error::MalformedMap(format!(
                "image has {} entries for {} source elements",
                image.len(),
                source.n()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&t| t >= target.n()) {
            return Err(Error::MalformedMap(format!(
                "image id {bad} outside the target poset"
            )));
        }
        Ok(OrderMap {
            source,
            target,
            image,
        })
    }

    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn target(&self) -> &Poset {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// Image of a subset of the source.
    pub fn apply_set(&self, xs: ElementSet) -> ElementSet {
        xs.iter().map(|x| self.image[x]).collect()
    }
}

/// Checks both clauses and reports them separately.
pub fn validate_map(m: &OrderMap) -> MapCertificate {
    let (p1, p2) = (&m.source, &m.target);
    let mut order_preserving = true;
    'outer: for x in 0..p1.n() {
        for y in p1.up_set(x).iter() {
            if !p2.leq(m.apply(x), m.apply(y)) {
                order_preserving = false;
                break 'outer;
            }
        }
    }
    let zero_safe = m.apply(p1.zero()) == p2.zero()
        && (0..p1.n()).all(|x| x == p1.zero() || m.apply(x) != p2.zero());
    MapCertificate {
        order_preserving,
        zero_safe,
    }
}
