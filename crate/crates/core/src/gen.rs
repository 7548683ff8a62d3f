//! Deterministic instance generators: a fixed catalog of small bounded
//! posets, seeded random posets, clutters and certified maps, and the
//! corpus bundling them for the verification suites.
//!
//! Randomness comes from SplitMix64 so that a seed names the same corpus
//! on every platform and in any reimplementation.

use crate::clutter::{boolean_lattice, clutter_from_antichain, Clutter};
use crate::error::{Error, Result};
use crate::map::{validate_map, OrderMap};
use crate::poset::Poset;
use crate::set::ElementSet;

/// SplitMix64: state advances by the golden-gamma constant, output is the
/// usual two-round xor-multiply finalizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    /// Bernoulli draw with probability `p`.
    pub fn chance(&mut self, p: f64) -> bool {
        ((self.next_u64() >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p
    }
}

/// The chain with `len` elements. The bottom is labeled `0`, the top
/// `1`; a lone interior element is labeled `m`, several are `m1, m2, ...`
pub fn chain(len: usize) -> Poset {
    assert!(len >= 2);
    let mut names = vec!["0".to_string()];
    for k in 1..len - 1 {
        names.push(if len == 3 {
            "m".to_string()
        } else {
            format!("m{k}")
        });
    }
    names.push("1".to_string());
    let covers: Vec<(usize, usize)> = (0..len - 1).map(|i| (i, i + 1)).collect();
    Poset::from_cover_relations(names, &covers).expect("chains are bounded posets")
}

/// The four-element square: 0 < a, b < 1.
pub fn b2() -> Poset {
    let names = ["0", "a", "b", "1"].map(String::from).to_vec();
    Poset::from_cover_relations(names, &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("valid")
}

/// The pentagon: 0 < x < z < 1 and 0 < y < 1.
pub fn n5() -> Poset {
    let names = ["0", "x", "y", "z", "1"].map(String::from).to_vec();
    Poset::from_cover_relations(names, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]).expect("valid")
}

/// The diamond: three incomparable interior elements between the bounds.
pub fn m3() -> Poset {
    let names = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
    Poset::from_cover_relations(names, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        .expect("valid")
}

/// Fixed instances exercising every hypothesis the rest of the crate
/// tests against: chains of length 2 through 5, the Boolean lattices on
/// 1 to 3 atoms, the square, the pentagon, the diamond, and one product
/// of each kind.
pub fn catalog() -> Vec<Poset> {
    let c3 = chain(3);
    vec![
        chain(2),
        c3.clone(),
        chain(4),
        chain(5),
        boolean_lattice(1).expect("in envelope"),
        boolean_lattice(2).expect("in envelope"),
        boolean_lattice(3).expect("in envelope"),
        b2(),
        n5(),
        m3(),
        c3.cartesian_product(&c3).expect("in envelope"),
        c3.reduced_bounded_product(&b2())
            .expect("factors large enough"),
    ]
}

/// Largest interior size [`random_bounded_poset`] accepts.
pub const MAX_MIDDLE: usize = 8;

/// A random bounded poset with `k` interior elements: a strict order is
/// drawn on the interior by lower-triangular coin flips with probability
/// 0.3 and closed transitively, then fresh bounds are adjoined.
pub fn random_bounded_poset(k: usize, seed: u64) -> Result<Poset> {
    if k == 0 || k > MAX_MIDDLE {
        return Err(Error::OutOfEnvelope(format!(
            "interior size {k} outside 1..={MAX_MIDDLE}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut names = vec!["0".to_string()];
    names.extend((1..=k).map(|i| format!("m{i}")));
    names.push("1".to_string());
    let mut relations: Vec<(usize, usize)> = Vec::new();
    for j in 2..=k {
        for i in 1..j {
            if rng.chance(0.3) {
                relations.push((i, j));
            }
        }
    }
    for m in 1..=k {
        relations.push((0, m));
        relations.push((m, k + 1));
    }
    Poset::from_cover_relations(names, &relations)
}

/// A random nontrivial clutter: the Sperner reduction of a few random
/// nonempty subsets of `{1, ..., n}`.
pub fn random_clutter(n: usize, seed: u64) -> Result<Clutter> {
    if n == 0 || n > 4 {
        return Err(Error::OutOfEnvelope(format!(
            "clutter ground {n} outside 1..=4"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let candidates = (1usize << n) - 1;
    let count = 1 + rng.below(candidates);
    let family: Vec<ElementSet> = (0..count)
        .map(|_| ElementSet::from_bits(1 + rng.below(candidates) as u64))
        .collect();
    Clutter::from_family(n, &family)
}

/// How many draws [`random_safe_map`] makes before reporting failure.
pub const MAP_ATTEMPTS: usize = 10_000;

/// Rejection-samples an order-preserving, zero-safe map between two
/// posets, or `None` after [`MAP_ATTEMPTS`] draws. Zero-safety holds by
/// construction; order preservation is the rejection criterion.
pub fn random_safe_map(p1: &Poset, p2: &Poset, seed: u64) -> Option<OrderMap> {
    let mut rng = SplitMix64::new(seed);
    let nonzero: Vec<usize> = (0..p2.n()).filter(|&x| x != p2.zero()).collect();
    for _ in 0..MAP_ATTEMPTS {
        let image: Vec<usize> = (0..p1.n())
            .map(|x| {
                if x == p1.zero() {
                    p2.zero()
                } else {
                    nonzero[rng.below(nonzero.len())]
                }
            })
            .collect();
        let m = OrderMap::new(p1.clone(), p2.clone(), image).expect("well-formed by construction");
        if validate_map(&m).holds() {
            return Some(m);
        }
    }
    None
}

/// Everything the verification suites quantify over, reproducible from
/// the seed alone.
#[derive(Clone, Debug, PartialEq)]
pub struct Corpus {
    pub seed: u64,
    /// Catalog first, then `samples` random posets with interior sizes
    /// cycling through `1..=max_middle`.
    pub posets: Vec<Poset>,
    /// Every clutter over grounds of size 1 to 3, then up to 100 random
    /// clutters over ground size 4.
    pub clutters: Vec<Clutter>,
    /// Up to 100 certified maps between corpus posets.
    pub maps: Vec<OrderMap>,
}

impl Corpus {
    pub fn generate(seed: u64, max_middle: usize, samples: usize) -> Result<Corpus> {
        if max_middle == 0 || max_middle > MAX_MIDDLE {
            return Err(Error::OutOfEnvelope(format!(
                "interior size bound {max_middle} outside 1..={MAX_MIDDLE}"
            )));
        }
        let mut rng = SplitMix64::new(seed);
        let mut posets = catalog();
        for i in 0..samples {
            let k = 1 + i % max_middle;
            posets.push(random_bounded_poset(k, rng.next_u64())?);
        }

        let mut clutters = Vec::new();
        for n in 1..=3 {
            let lattice = boolean_lattice(n)?;
            for a in crate::antichain::enumerate_antichains(&lattice)? {
                clutters.push(clutter_from_antichain(n, a)?);
            }
        }
        for _ in 0..samples.min(100) {
            clutters.push(random_clutter(4, rng.next_u64())?);
        }

        let mut maps = Vec::new();
        let mut pair = 0usize;
        while maps.len() < 100 && pair < 4 * posets.len() * posets.len() {
            let i = pair % posets.len();
            let j = (pair / posets.len()) % posets.len();
            pair += 1;
            if let Some(m) = random_safe_map(&posets[i], &posets[j], rng.next_u64()) {
                maps.push(m);
            }
        }
        Ok(Corpus {
            seed,
            posets,
            clutters,
            maps,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antichain::enumerate_antichains;

    #[test]
    fn catalog_contents() {
        let cat = catalog();
        assert_eq!(cat.len(), 12);
        assert!(cat.iter().all(|p| p.n() >= 2));
        let pentagon = &cat[8];
        assert_eq!(enumerate_antichains(pentagon).unwrap().len(), 8);
        let diamond = &cat[9];
        assert_eq!(diamond.atoms().len(), 3);
    }

    #[test]
    fn one_interior_element_forces_a_three_chain() {
        for seed in [0, 1, 42, 1234] {
            let p = random_bounded_poset(1, seed).unwrap();
            assert_eq!(p.n(), 3);
            assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        }
    }

    #[test]
    fn random_posets_are_valid_and_deterministic() {
        let a = random_bounded_poset(3, 42).unwrap();
        let b = random_bounded_poset(3, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.n(), 5);
        // round-trip through the poset's own cover relations
        let again = Poset::from_cover_relations(a.names().to_vec(), &a.covers()).unwrap();
        assert_eq!(a, again);
        assert!(matches!(
            random_bounded_poset(9, 0),
            Err(Error::OutOfEnvelope(_))
        ));
        assert!(matches!(
            random_bounded_poset(0, 0),
            Err(Error::OutOfEnvelope(_))
        ));
    }

    #[test]
    fn singleton_ground_admits_one_clutter() {
        for seed in 0..20 {
            let c = random_clutter(1, seed).unwrap();
            assert_eq!(c.sets(), &[ElementSet::singleton(0)]);
        }
    }

    #[test]
    fn self_maps_of_the_two_chain_reduce_to_the_identity() {
        let c2 = chain(2);
        let m = random_safe_map(&c2, &c2, 7).unwrap();
        assert_eq!((m.apply(0), m.apply(1)), (0, 1));
    }

    #[test]
    fn collapse_to_the_two_chain_always_exists() {
        for p in catalog() {
            let m = random_safe_map(&p, &chain(2), 99).expect("collapse map exists");
            assert!(validate_map(&m).holds());
        }
    }

    #[test]
    fn corpus_is_reproducible() {
        let a = Corpus::generate(42, 3, 20).unwrap();
        let b = Corpus::generate(42, 3, 20).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.posets.len(), 12 + 20);
        assert!(!a.maps.is_empty());
        for m in &a.maps {
            assert!(validate_map(m).holds());
        }
    }
}
