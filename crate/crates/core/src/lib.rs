//! Blockers of antichains in finite bounded posets.
//!
//! The crate models finite bounded posets, the lattice of their
//! antichains, and the blocker and complementary maps on it: every
//! antichain is assigned the antichain of its minimal intersecters and
//! the antichain of its maximal complementers. The image of the blocker
//! map is itself a lattice, and the [`verify`] module machine-checks its
//! advertised structure (involution, self-duality, meet-closure, the
//! preimage laws, the product closed forms, and the classical
//! blocking-set bridge) over a deterministic corpus of instances.

pub mod antichain;
pub mod blocker;
pub mod clutter;
pub mod dot;
mod error;
pub mod gen;
pub mod map;
pub mod parse;
pub mod poset;
pub mod product;
pub mod set;
pub mod verify;

pub use antichain::{
    antichain_join, antichain_leq, antichain_meet, enumerate_antichains, ideal_order_leq, Antichain,
};
pub use blocker::{
    blocker, blocker_image, complementary, complementers, intersecters,
    intersecters_by_clutter_formula, intersecters_by_filter_formula, map_preserves_intersecters,
    BlockerImage,
};
pub use clutter::{
    antichain_from_clutter, boolean_lattice, clutter_from_antichain, is_blocking_set, Clutter,
};
pub use error::{Error, Result};
pub use gen::{catalog, random_bounded_poset, random_clutter, random_safe_map, Corpus, SplitMix64};
pub use map::{validate_map, MapCertificate, OrderMap};
pub use poset::{Direction, Extreme, Factor, Poset};
pub use product::{intersecters_full_product, intersecters_reduced_product};
pub use set::ElementSet;
