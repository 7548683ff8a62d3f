//! Graphviz DOT emitters. Diagrams encode the cover relation only,
//! drawn bottom-up, with node names equal to the element serializations.

use crate::antichain::{antichain_leq, Antichain};
use crate::blocker::BlockerImage;
use crate::parse::format_antichain;
use crate::poset::Poset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram of an arbitrary finite order given by a predicate.
fn hasse_dot(names: &[String], leq: impl Fn(usize, usize) -> bool) -> String {
    let n = names.len();
    let strict = |i: usize, j: usize| i != j && leq(i, j);
    let mut out = String::from("digraph {\n  rankdir=BT;\n");
    for name in names {
        out.push_str(&format!("  {};\n", quote(name)));
    }
    for i in 0..n {
        for j in 0..n {
            if strict(i, j) && (0..n).all(|k| !(strict(i, k) && strict(k, j))) {
                out.push_str(&format!(
                    "  {} -> {};\n",
                    quote(&names[i]),
                    quote(&names[j])
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the poset itself.
pub fn poset_dot(p: &Poset) -> String {
    hasse_dot(p.names(), |i, j| p.leq(i, j))
}

/// Hasse diagram of a family of antichains under the antichain order;
/// pass the full enumeration to draw the whole antichain lattice.
pub fn antichain_lattice_dot(p: &Poset, antichains: &[Antichain]) -> String {
    let names: Vec<String> = antichains.iter().map(|&a| format_antichain(p, a)).collect();
    hasse_dot(&names, |i, j| {
        antichain_leq(p, antichains[i], antichains[j])
    })
}

/// Hasse diagram of the lattice of blockers.
pub fn blocker_image_dot(img: &BlockerImage) -> String {
    let names: Vec<String> = img
        .blockers()
        .iter()
        .map(|&b| format_antichain(img.poset(), b))
        .collect();
    hasse_dot(&names, |i, j| img.leq(i, j))
}
