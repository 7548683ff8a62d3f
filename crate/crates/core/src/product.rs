//! Products of bounded posets and the closed forms for intersecter sets
//! on them.
//!
//! Two constructions are supported: the plain Cartesian product with
//! componentwise order, and the reduced bounded product, which crosses
//! the interiors of the factors and adjoins fresh bounds. Both retain
//! coordinate tables so antichains can be projected back onto a factor.

use crate::antichain::Antichain;
use crate::blocker::{blocker, intersecters};
use crate::error::{Error, Result};
use crate::poset::{Factor, Poset, ProductInfo, ProductKind};
use crate::set::ElementSet;

fn pair_name(p1: &Poset, p2: &Poset, x1: usize, x2: usize) -> String {
    format!("({};{})", p1.name(x1), p2.name(x2))
}

impl Poset {
    /// The Cartesian product, ordered componentwise. Elements are laid
    /// out row-major in `(id1, id2)` and named `(label1;label2)`.
    pub fn cartesian_product(&self, other: &Poset) -> Result<Poset> {
        let (n1, n2) = (self.n(), other.n());
        if n1 * n2 > crate::set::MAX_ELEMENTS {
            return Err(Error::OutOfEnvelope(format!(
                "product would have {} elements",
                n1 * n2
            )));
        }
        let mut names = Vec::with_capacity(n1 * n2);
        let mut pairs = Vec::with_capacity(n1 * n2);
        for x1 in 0..n1 {
            for x2 in 0..n2 {
                names.push(pair_name(self, other, x1, x2));
                pairs.push(Some((x1, x2)));
            }
        }
        let up = (0..n1 * n2)
            .map(|id| {
                let (x1, x2) = (id / n2, id % n2);
                let mut row = ElementSet::EMPTY;
                for y1 in self.up_set(x1).iter() {
                    for y2 in other.up_set(x2).iter() {
                        row = row.with(y1 * n2 + y2);
                    }
                }
                row
            })
            .collect();
        let info = ProductInfo {
            kind: ProductKind::Full,
            factors: Box::new((self.clone(), other.clone())),
            pairs,
        };
        Poset::from_leq_masks(names, up, Some(info))
    }

    /// Crosses the factors with their bounds removed and adjoins a fresh
    /// least and greatest element. Both factors need more than two
    /// elements, so that their interiors are nonempty.
    pub fn reduced_bounded_product(&self, other: &Poset) -> Result<Poset> {
        if self.n() <= 2 || other.n() <= 2 {
            return Err(Error::FactorTooSmall);
        }
        let interior = |p: &Poset| -> Vec<usize> {
            (0..p.n())
                .filter(|&x| x != p.zero() && x != p.one())
                .collect()
        };
        let (mid1, mid2) = (interior(self), interior(other));
        let n = mid1.len() * mid2.len() + 2;
        if n > crate::set::MAX_ELEMENTS {
            return Err(Error::OutOfEnvelope(format!(
                "product would have {n} elements"
            )));
        }
        let mut names = vec!["0".to_string()];
        let mut pairs: Vec<Option<(usize, usize)>> = vec![None];
        for &x1 in &mid1 {
            for &x2 in &mid2 {
                names.push(pair_name(self, other, x1, x2));
                pairs.push(Some((x1, x2)));
            }
        }
        names.push("1".to_string());
        pairs.push(None);
        let encode = |i1: usize, i2: usize| 1 + i1 * mid2.len() + i2;
        let mut up = vec![ElementSet::EMPTY; n];
        up[0] = ElementSet::full(n);
        up[n - 1] = ElementSet::singleton(n - 1);
        for (i1, &x1) in mid1.iter().enumerate() {
            for (i2, &x2) in mid2.iter().enumerate() {
                let mut row = ElementSet::singleton(n - 1);
                for (j1, &y1) in mid1.iter().enumerate() {
                    for (j2, &y2) in mid2.iter().enumerate() {
                        if self.leq(x1, y1) && other.leq(x2, y2) {
                            row = row.with(encode(j1, j2));
                        }
                    }
                }
                up[encode(i1, i2)] = row;
            }
        }
        let info = ProductInfo {
            kind: ProductKind::Reduced,
            factors: Box::new((self.clone(), other.clone())),
            pairs,
        };
        Poset::from_leq_masks(names, up, Some(info))
    }

    /// Factor coordinates of a product element; `None` for the bounds a
    /// reduced product adjoined.
    pub fn product_pair(&self, id: usize) -> Option<(usize, usize)> {
        self.product.as_ref().and_then(|info| info.pairs[id])
    }

    /// The factor posets of a product.
    pub fn product_factors(&self) -> Option<(&Poset, &Poset)> {
        self.product
            .as_ref()
            .map(|info| (&info.factors.0, &info.factors.1))
    }

    /// Projects a subset of a product onto one factor. The subset must
    /// avoid the product's bounds.
    pub fn project_antichain(&self, a: ElementSet, which: Factor) -> Result<ElementSet> {
        if self.product.is_none() {
            return Err(Error::NotAProduct);
        }
        let a = a & self.universe();
        if a.contains(self.zero()) || a.contains(self.one()) {
            return Err(Error::BadSubset(
                "projection is defined away from the product's bounds".to_string(),
            ));
        }
        Ok(a.iter()
            .map(|id| {
                let (x1, x2) = self
                    .product_pair(id)
                    .expect("interior elements carry coordinates");
                match which {
                    Factor::First => x1,
                    Factor::Second => x2,
                }
            })
            .collect())
    }
}

/// Evaluates the intersecter set of `a` in the reduced bounded product
/// of the factors through its case split: if either factor's blocker of
/// the projection collapses to that factor's greatest element, only the
/// product's greatest element intersects; otherwise intersecters and
/// their minima multiply out coordinatewise. Returns the full intersecter
/// set together with its minimal antichain, over the ids of
/// [`Poset::reduced_bounded_product`].
pub fn intersecters_reduced_product(
    p1: &Poset,
    p2: &Poset,
    a: ElementSet,
) -> Result<(ElementSet, Antichain)> {
    let q = p1.reduced_bounded_product(p2)?;
    let a = a & q.universe();
    if a.is_empty() {
        return Err(Error::BadSubset(
            "the case split needs a nonempty subset".to_string(),
        ));
    }
    if a.contains(q.zero()) || a.contains(q.one()) {
        return Err(Error::BadSubset(
            "subset must avoid the adjoined bounds".to_string(),
        ));
    }
    let proj1 = q.project_antichain(a, Factor::First)?;
    let proj2 = q.project_antichain(a, Factor::Second)?;
    let b1 = blocker(p1, proj1);
    let b2 = blocker(p2, proj2);
    let top_q = ElementSet::singleton(q.one());
    if b1 == Antichain::singleton(p1.one()) || b2 == Antichain::singleton(p2.one()) {
        return Ok((top_q, Antichain::new_unchecked(top_q)));
    }
    let encode_product = |s1: ElementSet, s2: ElementSet| -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for id in q.universe().iter() {
            if let Some((x1, x2)) = q.product_pair(id) {
                if s1.contains(x1) && s2.contains(x2) {
                    out = out.with(id);
                }
            }
        }
        out
    };
    let i1 = intersecters(p1, proj1).without(p1.one());
    let i2 = intersecters(p2, proj2).without(p2.one());
    let full = encode_product(i1, i2) | top_q;
    let minimal = encode_product(b1.members(), b2.members());
    Ok((full, Antichain::new_unchecked(minimal)))
}

/// Evaluates the intersecter set of `a` in the full Cartesian product of
/// the factors through its closed form: for each member, elements whose
/// second coordinate intersects for the member's second coordinate or
/// whose first coordinate intersects for the first, intersected over all
/// members. Over the ids of [`Poset::cartesian_product`].
pub fn intersecters_full_product(p1: &Poset, p2: &Poset, a: ElementSet) -> Result<ElementSet> {
    let q = p1.cartesian_product(p2)?;
    let a = a & q.universe();
    if a.is_empty() {
        return Err(Error::BadSubset(
            "the closed form needs a nonempty subset".to_string(),
        ));
    }
    if a.contains(q.zero()) {
        return Err(Error::BadSubset(
            "subset must avoid the product's least element".to_string(),
        ));
    }
    let n2 = p2.n();
    let mut acc = q.universe();
    for id in a.iter() {
        let (a1, a2) = q.product_pair(id).expect("full products decode everywhere");
        let i1 = intersecters(p1, ElementSet::singleton(a1));
        let i2 = intersecters(p2, ElementSet::singleton(a2));
        let mut term = ElementSet::EMPTY;
        for x1 in 0..p1.n() {
            for x2 in 0..n2 {
                if i2.contains(x2) || i1.contains(x1) {
                    term = term.with(x1 * n2 + x2);
                }
            }
        }
        acc = acc & term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{b2, chain, n5};
    use crate::poset::Extreme;

    fn set(ids: &[usize]) -> ElementSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn c2_times_c2_is_the_square() {
        let c2 = chain(2);
        let q = c2.cartesian_product(&c2).unwrap();
        assert_eq!(q.n(), 4);
        assert_eq!(q.zero(), 0);
        assert_eq!(q.one(), 3);
        // atoms (0,1) and (1,0) in row-major ids
        assert_eq!(q.atoms(), set(&[1, 2]));
        assert_eq!(q.name(1), "(0;1)");
        assert!(q.leq(1, 3) && q.leq(2, 3) && !q.comparable(1, 2));
    }

    #[test]
    fn product_atom_law() {
        let c2 = chain(2);
        let c3 = chain(3);
        let q = c2.cartesian_product(&c3).unwrap();
        assert_eq!(q.n(), 6);
        let mut expected = ElementSet::EMPTY;
        for a2 in c3.atoms().iter() {
            expected = expected.with(c2.zero() * 3 + a2);
        }
        for a1 in c2.atoms().iter() {
            expected = expected.with(a1 * 3 + c3.zero());
        }
        assert_eq!(q.atoms(), expected);
    }

    #[test]
    fn reduced_product_of_two_c3_is_a_chain() {
        let c3 = chain(3);
        let q = c3.reduced_bounded_product(&c3).unwrap();
        assert_eq!(q.n(), 3);
        assert_eq!(q.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(q.name(1), "(m;m)");
    }

    #[test]
    fn reduced_product_c3_b2() {
        let q = chain(3).reduced_bounded_product(&b2()).unwrap();
        assert_eq!(q.n(), 4);
        assert_eq!(q.names(), &["0", "(m;a)", "(m;b)", "1"]);
        assert!(!q.comparable(1, 2));
        assert_eq!(q.atoms(), set(&[1, 2]));
    }

    #[test]
    fn reduced_product_rejects_small_factors() {
        assert!(matches!(
            chain(2).reduced_bounded_product(&chain(3)),
            Err(Error::FactorTooSmall)
        ));
    }

    #[test]
    fn projections() {
        let q = chain(3).reduced_bounded_product(&b2()).unwrap();
        assert_eq!(
            q.project_antichain(ElementSet::EMPTY, Factor::First)
                .unwrap(),
            ElementSet::EMPTY
        );
        let a = set(&[1, 2]); // {(m;a), (m;b)}
        assert_eq!(q.project_antichain(a, Factor::First).unwrap(), set(&[1]));
        assert_eq!(
            q.project_antichain(a, Factor::Second).unwrap(),
            set(&[1, 2])
        );
        assert!(matches!(
            chain(3).project_antichain(set(&[1]), Factor::First),
            Err(Error::NotAProduct)
        ));
        assert!(matches!(
            q.project_antichain(set(&[0, 1]), Factor::First),
            Err(Error::BadSubset(_))
        ));
    }

    #[test]
    fn reduced_closed_form_interior_case() {
        let c3 = chain(3);
        let (full, minimal) = intersecters_reduced_product(&c3, &c3, set(&[1])).unwrap();
        // q = 0 < (m;m) < 1: intersecters of {(m;m)} are itself and the top
        assert_eq!(full, set(&[1, 2]));
        assert_eq!(minimal.members(), set(&[1]));
    }

    #[test]
    fn reduced_closed_form_collapsing_case() {
        let (full, minimal) = intersecters_reduced_product(&chain(3), &b2(), set(&[1, 2])).unwrap();
        let q = chain(3).reduced_bounded_product(&b2()).unwrap();
        assert_eq!(full, ElementSet::singleton(q.one()));
        assert_eq!(minimal.members(), ElementSet::singleton(q.one()));
    }

    #[test]
    fn reduced_closed_form_rejects_bad_subsets() {
        let c3 = chain(3);
        assert!(matches!(
            intersecters_reduced_product(&c3, &c3, ElementSet::EMPTY),
            Err(Error::BadSubset(_))
        ));
        assert!(matches!(
            intersecters_reduced_product(&c3, &c3, set(&[0])),
            Err(Error::BadSubset(_))
        ));
    }

    #[test]
    fn full_closed_form_examples() {
        let c2 = chain(2);
        // A = {(1,1)} = id 3: everything except the bottom intersects
        assert_eq!(
            intersecters_full_product(&c2, &c2, set(&[3])).unwrap(),
            set(&[1, 2, 3])
        );
        // A = {(1,0)} = id 2: second coordinate contributes nothing
        assert_eq!(
            intersecters_full_product(&c2, &c2, set(&[2])).unwrap(),
            set(&[2, 3])
        );
        // C2 x C3, A = {(1;m)} = id 4: first coordinate 1 or second >= m
        let c3 = chain(3);
        assert_eq!(
            intersecters_full_product(&c2, &c3, set(&[4])).unwrap(),
            set(&[1, 2, 3, 4, 5])
        );
    }

    #[test]
    fn closed_forms_agree_with_direct_scan() {
        let pairs = [(chain(3), chain(3)), (chain(3), b2()), (b2(), n5())];
        for (p1, p2) in pairs {
            let q = p1.cartesian_product(&p2).unwrap();
            let allowed = q.universe().without(q.zero());
            for bits in 1..1u64 << q.n() {
                let a = ElementSet::from_bits(bits);
                if !a.is_subset(allowed) {
                    continue;
                }
                assert_eq!(
                    intersecters_full_product(&p1, &p2, a).unwrap(),
                    intersecters(&q, a),
                    "{:?} on {}x{}",
                    a,
                    p1.n(),
                    p2.n()
                );
            }
            if p1.n() <= 2 || p2.n() <= 2 {
                continue;
            }
            let q = p1.reduced_bounded_product(&p2).unwrap();
            let interior = q.universe().without(q.zero()).without(q.one());
            for bits in 1..1u64 << q.n() {
                let a = ElementSet::from_bits(bits);
                if a.is_empty() || !a.is_subset(interior) {
                    continue;
                }
                let (full, minimal) = intersecters_reduced_product(&p1, &p2, a).unwrap();
                assert_eq!(full, intersecters(&q, a));
                assert_eq!(minimal, q.extremes(intersecters(&q, a), Extreme::Min));
            }
        }
    }
}
