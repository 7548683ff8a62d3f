//! Exhaustive property suites over a seeded corpus, with counterexample
//! shrinking and deliberate fault injection.
//!
//! Every advertised law of the crate is re-checked here against
//! definitional computations: lattice axioms on antichains, the
//! partition and reduction identities for intersecters, the equivalence
//! of the three intersecter routes, involution and self-duality of the
//! blocker image, the preimage laws, the product closed forms, and the
//! classical clutter bridge. A [`Fault`] corrupts the blocker map on
//! purpose so the reporting and shrinking machinery can be exercised end
//! to end.

use crate::antichain::{
    antichain_join, antichain_leq, antichain_meet, enumerate_antichains, ideal_order_leq, Antichain,
};
use crate::blocker::{
    blocker, blocker_image_with, complementary, complementers, intersecters,
    intersecters_by_clutter_formula, intersecters_by_filter_formula, map_preserves_intersecters,
};
use crate::clutter::{antichain_from_clutter, boolean_lattice, minimal_blocking_sets, Clutter};
use crate::error::Result;
use crate::gen::{Corpus, SplitMix64};
use crate::map::validate_map;
use crate::parse::{format_poset_file, format_subset};
use crate::poset::{Direction, Extreme, Poset};
use crate::set::{graded_lex, ElementSet};

/// Parameters for [`run_all`]; the defaults match the CLI defaults.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub max_middle: usize,
    pub samples: usize,
    pub fault: Fault,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            seed: 42,
            max_middle: 6,
            samples: 200,
            fault: Fault::None,
        }
    }
}

/// A deliberate corruption of the blocker map, injected into every suite
/// that routes through it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Fault {
    #[default]
    None,
    /// Reduce the intersecter set with `max` instead of `min`.
    BlockerMax,
    /// Replace the blocker of an antichain by the union of the blockers
    /// of its members.
    BlockerUnion,
}

impl Fault {
    pub const NAMES: &'static [&'static str] = &["blocker-max", "blocker-union"];

    pub fn parse(s: &str) -> Option<Fault> {
        match s {
            "blocker-max" => Some(Fault::BlockerMax),
            "blocker-union" => Some(Fault::BlockerUnion),
            _ => None,
        }
    }

    /// The (possibly corrupted) blocker map.
    pub fn blocker(self, p: &Poset, a: ElementSet) -> Antichain {
        match self {
            Fault::None => blocker(p, a),
            Fault::BlockerMax => p.extremes(intersecters(p, a), Extreme::Max),
            Fault::BlockerUnion => {
                let targets = (a & p.universe()).without(p.zero());
                if targets.is_empty() {
                    return blocker(p, a);
                }
                let union = targets.iter().fold(ElementSet::EMPTY, |acc, x| {
                    acc | (p.down_set(x) & p.atoms())
                });
                p.extremes(union, Extreme::Min)
            }
        }
    }
}

/// What a failed check reports: either a poset instance (shrinkable) or
/// a preformatted description of a non-poset instance.
#[derive(Clone, Debug)]
pub enum Subject {
    Instance { poset: Poset, sets: Vec<ElementSet> },
    Other(String),
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub subject: Subject,
    pub detail: String,
}

impl Failure {
    /// Multi-line report: the poset as a loadable file, the instance
    /// sets, and what went wrong.
    pub fn render(&self) -> String {
        let mut out = String::new();
        match &self.subject {
            Subject::Instance { poset, sets } => {
                for line in format_poset_file(poset).lines() {
                    out.push_str("  ");
                    out.push_str(line);
                    out.push('\n');
                }
                for (i, &s) in sets.iter().enumerate() {
                    let label = if sets.len() == 1 {
                        "subset".to_string()
                    } else {
                        format!("subset {}", i + 1)
                    };
                    out.push_str(&format!("  {label}: {}\n", format_subset(poset, s)));
                }
            }
            Subject::Other(text) => {
                for line in text.lines() {
                    out.push_str("  ");
                    out.push_str(line);
                    out.push('\n');
                }
            }
        }
        out.push_str(&format!("  detail: {}\n", self.detail));
        out
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: u64,
    pub failure: Option<Failure>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// A property evaluated on a poset instance. Returns `Some(detail)` when
/// the instance violates the property, `None` when it holds or when the
/// instance is not well-formed for the property (which makes shrinking
/// reject that step).
type Prop<'a> = &'a dyn Fn(&Poset, &[ElementSet]) -> Option<String>;

/// Greedy 1-minimality: drop single members of the instance sets, then
/// interior poset elements the sets do not mention, as long as the
/// property keeps failing.
fn shrink(
    mut poset: Poset,
    mut sets: Vec<ElementSet>,
    prop: Prop,
) -> (Poset, Vec<ElementSet>, String) {
    let mut detail = prop(&poset, &sets).expect("shrink starts from a failing instance");
    loop {
        let mut progressed = false;
        'sets: for i in 0..sets.len() {
            for x in sets[i].iter() {
                let mut candidate = sets.clone();
                candidate[i] = candidate[i].without(x);
                if let Some(d) = prop(&poset, &candidate) {
                    sets = candidate;
                    detail = d;
                    progressed = true;
                    break 'sets;
                }
            }
        }
        if progressed {
            continue;
        }
        let used = sets.iter().fold(ElementSet::EMPTY, |acc, &s| acc | s);
        for m in poset.universe().iter() {
            if m == poset.zero() || m == poset.one() || used.contains(m) {
                continue;
            }
            let (sub, mapping) = poset.restrict(poset.universe().without(m));
            let remapped: Vec<ElementSet> = sets
                .iter()
                .map(|s| s.iter().map(|x| mapping[x].expect("kept id")).collect())
                .collect();
            if let Some(d) = prop(&sub, &remapped) {
                poset = sub;
                sets = remapped;
                detail = d;
                progressed = true;
                break;
            }
        }
        if !progressed {
            return (poset, sets, detail);
        }
    }
}

struct Runner {
    name: &'static str,
    checks: u64,
    failure: Option<Failure>,
}

impl Runner {
    fn new(name: &'static str) -> Runner {
        Runner {
            name,
            checks: 0,
            failure: None,
        }
    }

    fn running(&self) -> bool {
        self.failure.is_none()
    }

    fn pass(&mut self) {
        self.checks += 1;
    }

    /// Record a failing poset instance, shrinking it first.
    fn fail_instance(&mut self, poset: &Poset, sets: &[ElementSet], prop: Prop) {
        self.checks += 1;
        let (p, s, detail) = shrink(poset.clone(), sets.to_vec(), prop);
        self.failure = Some(Failure {
            subject: Subject::Instance { poset: p, sets: s },
            detail,
        });
    }

    fn fail_other(&mut self, description: String, detail: String) {
        self.checks += 1;
        self.failure = Some(Failure {
            subject: Subject::Other(description),
            detail,
        });
    }

    /// Evaluate `prop` on the instance; record and shrink on violation.
    /// Returns false once the suite has failed.
    fn check(&mut self, poset: &Poset, sets: &[ElementSet], prop: Prop) -> bool {
        if !self.running() {
            return false;
        }
        if prop(poset, sets).is_some() {
            self.fail_instance(poset, sets, prop);
        } else {
            self.pass();
        }
        self.running()
    }

    fn done(self) -> SuiteOutcome {
        SuiteOutcome {
            name: self.name,
            checks: self.checks,
            failure: self.failure,
        }
    }
}

/// All subsets of `p`'s universe if the poset is small enough, otherwise
/// a deterministic sample.
fn subset_space(p: &Poset, seed: u64) -> Vec<ElementSet> {
    let n = p.n();
    if n <= 12 {
        (0..1u64 << n).map(ElementSet::from_bits).collect()
    } else {
        let mut rng = SplitMix64::new(seed);
        (0..4096)
            .map(|_| ElementSet::from_bits(rng.next_u64()) & p.universe())
            .collect()
    }
}

fn fmt_ac(p: &Poset, a: Antichain) -> String {
    format_subset(p, a.members())
}

// ---------------------------------------------------------------------
// poset-level suites

fn suite_closure_idempotence(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("closure-idempotence");
    let prop = |p: &Poset, _: &[ElementSet]| -> Option<String> {
        for x in 0..p.n() {
            let mut reach = p.up_set(x);
            for y in p.up_set(x).iter() {
                reach = reach | p.up_set(y);
            }
            if reach != p.up_set(x) {
                return Some(format!(
                    "closing the relation again changes the row of {}",
                    p.name(x)
                ));
            }
            for y in p.up_set(x).iter() {
                if y != x && p.leq(y, x) {
                    return Some(format!(
                        "antisymmetry fails on {} and {}",
                        p.name(x),
                        p.name(y)
                    ));
                }
            }
        }
        None
    };
    for p in &corpus.posets {
        if !r.check(p, &[], &prop) {
            break;
        }
    }
    r.done()
}

fn suite_hull_and_extremes(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("hull-and-extremes");
    let prop = |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let x = *sets.first()? & p.universe();
        let up = p.hull(x, Direction::Up);
        let down = p.hull(x, Direction::Down);
        for m in up.iter() {
            if !p.up_set(m).is_subset(up) {
                return Some("generated filter is not upward closed".to_string());
            }
        }
        for m in down.iter() {
            if !p.down_set(m).is_subset(down) {
                return Some("generated ideal is not downward closed".to_string());
            }
        }
        let mins = p.extremes(x, Extreme::Min);
        let maxs = p.extremes(x, Extreme::Max);
        if !mins.members().is_subset(x) || !maxs.members().is_subset(x) {
            return Some("extremes left the subset".to_string());
        }
        if !p.is_antichain(mins.members()) || !p.is_antichain(maxs.members()) {
            return Some("extremes are not an antichain".to_string());
        }
        if up == x && !x.is_subset(p.hull(mins.members(), Direction::Up)) {
            return Some("an up-set is not regenerated by its minimal elements".to_string());
        }
        if down == x && !x.is_subset(p.hull(maxs.members(), Direction::Down)) {
            return Some("a down-set is not regenerated by its maximal elements".to_string());
        }
        None
    };
    'outer: for (i, p) in corpus.posets.iter().enumerate() {
        for x in subset_space(p, corpus.seed ^ i as u64) {
            if !r.check(p, &[x], &prop) {
                break 'outer;
            }
        }
    }
    r.done()
}

fn suite_product_atom_laws(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("product-atom-laws");
    let catalog = &corpus.posets[..12.min(corpus.posets.len())];
    for p1 in catalog {
        for p2 in catalog {
            if !r.running() {
                return r.done();
            }
            if let Ok(q) = p1.cartesian_product(p2) {
                let mut law = ElementSet::EMPTY;
                for a2 in p2.atoms().iter() {
                    law = law.with(p1.zero() * p2.n() + a2);
                }
                for a1 in p1.atoms().iter() {
                    law = law.with(a1 * p2.n() + p2.zero());
                }
                let by_covers: ElementSet = q
                    .covers()
                    .iter()
                    .filter(|&&(lo, _)| lo == q.zero())
                    .map(|&(_, hi)| hi)
                    .collect();
                if q.atoms() != law || q.atoms() != by_covers {
                    r.fail_other(
                        format_poset_file(&q),
                        "cartesian product atoms differ from the factor atom law".to_string(),
                    );
                    continue;
                }
                r.pass();
            }
            if let Ok(q) = p1.reduced_bounded_product(p2) {
                let law: ElementSet = q
                    .universe()
                    .iter()
                    .filter(|&id| {
                        q.product_pair(id).is_some_and(|(x1, x2)| {
                            p1.atoms().contains(x1) && p2.atoms().contains(x2)
                        })
                    })
                    .collect();
                let by_covers: ElementSet = q
                    .covers()
                    .iter()
                    .filter(|&&(lo, _)| lo == q.zero())
                    .map(|&(_, hi)| hi)
                    .collect();
                if q.atoms() != law || q.atoms() != by_covers {
                    r.fail_other(
                        format_poset_file(&q),
                        "reduced product atoms differ from the atom product law".to_string(),
                    );
                    continue;
                }
                r.pass();
            }
        }
    }
    r.done()
}

// ---------------------------------------------------------------------
// antichain-lattice suites

fn antichains_of(p: &Poset) -> Vec<Antichain> {
    enumerate_antichains(p).expect("corpus posets stay inside the enumeration envelope")
}

fn as_antichain(p: &Poset, s: ElementSet) -> Option<Antichain> {
    Antichain::new(p, s).ok()
}

fn suite_lattice_laws(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("antichain-lattice-laws");
    let pair_prop = |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let (a, b) = (
            as_antichain(p, *sets.first()?)?,
            as_antichain(p, *sets.get(1)?)?,
        );
        if antichain_join(p, a, a) != a || antichain_meet(p, a, a) != a {
            return Some(format!("idempotence fails on {}", fmt_ac(p, a)));
        }
        if antichain_join(p, a, b) != antichain_join(p, b, a)
            || antichain_meet(p, a, b) != antichain_meet(p, b, a)
        {
            return Some("commutativity fails".to_string());
        }
        if antichain_join(p, a, antichain_meet(p, a, b)) != a
            || antichain_meet(p, a, antichain_join(p, a, b)) != a
        {
            return Some("absorption fails".to_string());
        }
        None
    };
    let triple_prop = |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let a = as_antichain(p, *sets.first()?)?;
        let b = as_antichain(p, *sets.get(1)?)?;
        let c = as_antichain(p, *sets.get(2)?)?;
        let j = |x, y| antichain_join(p, x, y);
        let m = |x, y| antichain_meet(p, x, y);
        if j(j(a, b), c) != j(a, j(b, c)) {
            return Some("join associativity fails".to_string());
        }
        if m(m(a, b), c) != m(a, m(b, c)) {
            return Some("meet associativity fails".to_string());
        }
        None
    };
    'outer: for (i, p) in corpus.posets.iter().enumerate() {
        let ants = antichains_of(p);
        for &a in &ants {
            for &b in &ants {
                if !r.check(p, &[a.members(), b.members()], &pair_prop) {
                    break 'outer;
                }
            }
        }
        if i < 12 {
            for &a in &ants {
                for &b in &ants {
                    for &c in &ants {
                        if !r.check(p, &[a.members(), b.members(), c.members()], &triple_prop) {
                            break 'outer;
                        }
                    }
                }
            }
        } else {
            let mut rng = SplitMix64::new(corpus.seed ^ (0x3A5 + i as u64));
            for _ in 0..200 {
                let pick = |rng: &mut SplitMix64| ants[rng.below(ants.len())];
                let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                if !r.check(p, &[a.members(), b.members(), c.members()], &triple_prop) {
                    break 'outer;
                }
            }
        }
    }
    r.done()
}

fn suite_order_compatibility(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("antichain-order-compatibility");
    let prop = |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let (a, b) = (
            as_antichain(p, *sets.first()?)?,
            as_antichain(p, *sets.get(1)?)?,
        );
        let leq = antichain_leq(p, a, b);
        let by_meet = antichain_meet(p, a, b) == a;
        let by_join = antichain_join(p, a, b) == b;
        if leq != by_meet || leq != by_join {
            return Some(format!(
                "{} <= {}: order {}, meet {}, join {}",
                fmt_ac(p, a),
                fmt_ac(p, b),
                leq,
                by_meet,
                by_join
            ));
        }
        None
    };
    'outer: for p in &corpus.posets {
        let ants = antichains_of(p);
        for &a in &ants {
            for &b in &ants {
                if !r.check(p, &[a.members(), b.members()], &prop) {
                    break 'outer;
                }
            }
        }
    }
    r.done()
}

fn suite_distributivity(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("antichain-distributivity");
    let prop = |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let a = as_antichain(p, *sets.first()?)?;
        let b = as_antichain(p, *sets.get(1)?)?;
        let c = as_antichain(p, *sets.get(2)?)?;
        let lhs = antichain_meet(p, a, antichain_join(p, b, c));
        let rhs = antichain_join(p, antichain_meet(p, a, b), antichain_meet(p, a, c));
        (lhs != rhs).then(|| {
            format!(
                "meet does not distribute over join: {} vs {}",
                fmt_ac(p, lhs),
                fmt_ac(p, rhs)
            )
        })
    };
    'outer: for (i, p) in corpus.posets.iter().enumerate() {
        let ants = antichains_of(p);
        if i < 12 {
            for &a in &ants {
                for &b in &ants {
                    for &c in &ants {
                        if !r.check(p, &[a.members(), b.members(), c.members()], &prop) {
                            break 'outer;
                        }
                    }
                }
            }
        } else {
            let mut rng = SplitMix64::new(corpus.seed ^ (0xD15 + i as u64));
            for _ in 0..200 {
                let pick = |rng: &mut SplitMix64| ants[rng.below(ants.len())];
                let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                if !r.check(p, &[a.members(), b.members(), c.members()], &prop) {
                    break 'outer;
                }
            }
        }
    }
    r.done()
}

fn suite_enumeration(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("antichain-enumeration");
    let prop = |p: &Poset, _: &[ElementSet]| -> Option<String> {
        let ants = enumerate_antichains(p).ok()?;
        for w in ants.windows(2) {
            if graded_lex(w[0].members(), w[1].members()) != std::cmp::Ordering::Less {
                return Some("enumeration is not strictly graded-lexicographic".to_string());
            }
        }
        if !ants.contains(&Antichain::EMPTY) || !ants.contains(&Antichain::singleton(p.zero())) {
            return Some("a trivial antichain is missing".to_string());
        }
        let mut filters = std::collections::HashSet::new();
        for &a in &ants {
            if !p.is_antichain(a.members()) {
                return Some(format!("{} is not an antichain", fmt_ac(p, a)));
            }
            let f = p.hull(a.members(), Direction::Up);
            if !filters.insert(f.bits()) {
                return Some("two antichains generate the same filter".to_string());
            }
            if p.extremes(f, Extreme::Min) != a {
                return Some(format!(
                    "minimal elements of the filter of {} differ from it",
                    fmt_ac(p, a)
                ));
            }
            if !antichain_leq(p, Antichain::EMPTY, a)
                || !antichain_leq(p, a, Antichain::singleton(p.zero()))
            {
                return Some("bounds of the antichain order are wrong".to_string());
            }
        }
        None
    };
    for p in &corpus.posets {
        if !r.check(p, &[], &prop) {
            break;
        }
    }
    r.done()
}

// ---------------------------------------------------------------------
// intersecter/blocker suites

fn suite_partition(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("partition-and-nonemptiness");
    let prop = |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let a = *sets.first()? & p.universe();
        let i = intersecters(p, a);
        let c = complementers(p, a);
        if (i | c) != p.universe() || !(i & c).is_empty() {
            return Some("intersecters and complementers do not partition the poset".to_string());
        }
        if !a.is_empty() && !a.contains(p.zero()) {
            if !i.contains(p.one()) {
                return Some("the greatest element fails to intersect".to_string());
            }
            if !c.contains(p.zero()) {
                return Some("the least element fails to complement".to_string());
            }
        }
        None
    };
    'outer: for (i, p) in corpus.posets.iter().enumerate() {
        for x in subset_space(p, corpus.seed ^ (0xAA0 + i as u64)) {
            if !r.check(p, &[x], &prop) {
                break 'outer;
            }
        }
    }
    r.done()
}

fn nonzero_subsets(p: &Poset, seed: u64) -> Vec<ElementSet> {
    subset_space(p, seed)
        .into_iter()
        .filter(|s| !s.is_empty() && !s.contains(p.zero()))
        .collect()
}

fn suite_min_reduction(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("min-reduction");
    let prop = |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let a = *sets.first()? & p.universe();
        if a.is_empty() || a.contains(p.zero()) {
            return None;
        }
        let reduced = p.extremes(a, Extreme::Min).members();
        if intersecters(p, a) != intersecters(p, reduced) {
            return Some(format!(
                "intersecters of {} differ from those of its minimal elements {}",
                format_subset(p, a),
                format_subset(p, reduced)
            ));
        }
        if complementers(p, a) != complementers(p, reduced) {
            return Some("complementers change under minimal reduction".to_string());
        }
        None
    };
    'outer: for (i, p) in corpus.posets.iter().enumerate() {
        for x in nonzero_subsets(p, corpus.seed ^ (0xB17 + i as u64)) {
            if !r.check(p, &[x], &prop) {
                break 'outer;
            }
        }
    }
    r.done()
}

fn suite_factorization(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("intersecter-factorization");
    let prop = |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let a = *sets.first()? & p.universe();
        if a.is_empty() || a.contains(p.zero()) {
            return None;
        }
        let mut i_acc = p.universe();
        let mut c_acc = ElementSet::EMPTY;
        for x in a.iter() {
            i_acc = i_acc & intersecters(p, ElementSet::singleton(x));
            c_acc = c_acc | complementers(p, ElementSet::singleton(x));
        }
        if intersecters(p, a) != i_acc {
            return Some("intersecters do not factor through the members".to_string());
        }
        if complementers(p, a) != c_acc {
            return Some("complementers do not factor through the members".to_string());
        }
        None
    };
    'outer: for (i, p) in corpus.posets.iter().enumerate() {
        for x in nonzero_subsets(p, corpus.seed ^ (0xFAC + i as u64)) {
            if !r.check(p, &[x], &prop) {
                break 'outer;
            }
        }
    }
    r.done()
}

fn suite_formula_equivalence(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("formula-equivalence");
    let prop = |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let a = *sets.first()? & p.universe();
        if a.is_empty() || a.contains(p.zero()) {
            return None;
        }
        let scan = intersecters(p, a);
        let filters = intersecters_by_filter_formula(p, a).ok()?;
        let dualized = intersecters_by_clutter_formula(p, a).ok()?;
        if scan != filters {
            return Some(format!(
                "definition scan {} vs filter formula {}",
                format_subset(p, scan),
                format_subset(p, filters)
            ));
        }
        if scan != dualized {
            return Some(format!(
                "definition scan {} vs clutter formula {}",
                format_subset(p, scan),
                format_subset(p, dualized)
            ));
        }
        None
    };
    'outer: for (i, p) in corpus.posets.iter().enumerate() {
        for x in nonzero_subsets(p, corpus.seed ^ (0xE90 + i as u64)) {
            if !r.check(p, &[x], &prop) {
                break 'outer;
            }
        }
    }
    r.done()
}

fn suite_filter_ideal_structure(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("filter-ideal-structure");
    let prop = |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let a = *sets.first()? & p.universe();
        let i = intersecters(p, a);
        let c = complementers(p, a);
        if p.hull(p.extremes(i, Extreme::Min).members(), Direction::Up) != i {
            return Some("intersecters are not the filter of their minimal elements".to_string());
        }
        if p.hull(p.extremes(c, Extreme::Max).members(), Direction::Down) != c {
            return Some("complementers are not the ideal of their maximal elements".to_string());
        }
        None
    };
    'outer: for (i, p) in corpus.posets.iter().enumerate() {
        for x in subset_space(p, corpus.seed ^ (0xF1D + i as u64)) {
            if !r.check(p, &[x], &prop) {
                break 'outer;
            }
        }
    }
    r.done()
}

fn suite_antitonicity(corpus: &Corpus, fault: Fault) -> SuiteOutcome {
    let mut r = Runner::new("antitonicity-and-reciprocity");
    let pair_prop = move |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let (a1, a2) = (
            as_antichain(p, *sets.first()?)?,
            as_antichain(p, *sets.get(1)?)?,
        );
        if !antichain_leq(p, a1, a2) {
            return None;
        }
        if !intersecters(p, a2.members()).is_subset(intersecters(p, a1.members())) {
            return Some("intersecter sets are not antitone".to_string());
        }
        let (b1, b2) = (
            fault.blocker(p, a1.members()),
            fault.blocker(p, a2.members()),
        );
        if !antichain_leq(p, b2, b1) {
            return Some(format!(
                "blockers are not antitone: {} <= {} but beta gives {} and {}",
                fmt_ac(p, a1),
                fmt_ac(p, a2),
                fmt_ac(p, b1),
                fmt_ac(p, b2)
            ));
        }
        None
    };
    let reciprocity_prop = move |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let a = as_antichain(p, *sets.first()?)?;
        let b = fault.blocker(p, a.members());
        if !a.members().is_subset(intersecters(p, b.members())) {
            return Some(format!(
                "{} is not contained in the intersecters of its blocker {}",
                fmt_ac(p, a),
                fmt_ac(p, b)
            ));
        }
        None
    };
    'outer: for p in &corpus.posets {
        let ants = antichains_of(p);
        for &a in &ants {
            if !r.check(p, &[a.members()], &reciprocity_prop) {
                break 'outer;
            }
            for &b in &ants {
                if !r.check(p, &[a.members(), b.members()], &pair_prop) {
                    break 'outer;
                }
            }
        }
    }
    r.done()
}

fn image_with_fault(p: &Poset, fault: Fault) -> crate::blocker::BlockerImage {
    blocker_image_with(p, |q, a| fault.blocker(q, a))
        .expect("corpus posets stay inside the enumeration envelope")
}

fn suite_involution(corpus: &Corpus, fault: Fault) -> SuiteOutcome {
    let mut r = Runner::new("blocker-involution");
    let prop = move |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let b = as_antichain(p, *sets.first()?)?;
        let img = image_with_fault(p, fault);
        if !img.contains(b) {
            return None;
        }
        let twice = fault.blocker(p, fault.blocker(p, b.members()).members());
        (twice != b).then(|| {
            format!(
                "double blocker of {} is {}, not itself",
                fmt_ac(p, b),
                fmt_ac(p, twice)
            )
        })
    };
    'outer: for p in &corpus.posets {
        let img = image_with_fault(p, fault);
        for &b in img.blockers() {
            if !r.check(p, &[b.members()], &prop) {
                break 'outer;
            }
        }
    }
    r.done()
}

fn suite_image_structure(corpus: &Corpus, fault: Fault) -> SuiteOutcome {
    let mut r = Runner::new("blocker-image-structure");
    let global_prop = move |p: &Poset, _: &[ElementSet]| -> Option<String> {
        let img = image_with_fault(p, fault);
        let bottom = Antichain::EMPTY;
        let top = Antichain::singleton(p.zero());
        if !img.contains(bottom) || !img.contains(top) {
            return Some("a trivial blocker is missing from the image".to_string());
        }
        for &b in img.blockers() {
            if !antichain_leq(p, bottom, b) || !antichain_leq(p, b, top) {
                return Some("image bounds are not the trivial blockers".to_string());
            }
        }
        // restricted blocker map: a bijection of the image onto itself
        let mapped: std::collections::BTreeSet<Antichain> = img
            .blockers()
            .iter()
            .map(|&b| fault.blocker(p, b.members()))
            .collect();
        if mapped.len() != img.len() || !mapped.iter().all(|&b| img.contains(b)) {
            return Some("the blocker map does not permute the image".to_string());
        }
        let atoms = img.image_atoms();
        let expect_atom = fault.blocker(p, p.atoms());
        if atoms.len() != 1 || img.blockers()[atoms[0]] != expect_atom {
            return Some(format!(
                "unique atom should be the blocker of the atom antichain {}",
                fmt_ac(p, Antichain::new_unchecked(p.atoms()))
            ));
        }
        let coatoms = img.image_coatoms();
        if coatoms.len() != 1 || img.blockers()[coatoms[0]].members() != p.atoms() {
            return Some("unique coatom should be the atom antichain".to_string());
        }
        None
    };
    let pair_prop = move |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let (b1, b2) = (
            as_antichain(p, *sets.first()?)?,
            as_antichain(p, *sets.get(1)?)?,
        );
        let img = image_with_fault(p, fault);
        let (Some(i1), Some(i2)) = (img.index_of(b1), img.index_of(b2)) else {
            return None;
        };
        let meet = antichain_meet(p, b1, b2);
        if !img.contains(meet) {
            return Some(format!(
                "meet {} of two image members escapes the image",
                fmt_ac(p, meet)
            ));
        }
        // order reversal of the restricted map, both directions
        let (m1, m2) = (
            fault.blocker(p, b1.members()),
            fault.blocker(p, b2.members()),
        );
        let (Some(j1), Some(j2)) = (img.index_of(m1), img.index_of(m2)) else {
            return Some("the blocker map leaves the image".to_string());
        };
        if img.leq(i1, i2) != img.leq(j2, j1) {
            return Some("the restricted blocker map is not order reversing".to_string());
        }
        // join formula and least-upper-bound property
        let join = fault.blocker(p, antichain_meet(p, m1, m2).members());
        let Some(ij) = img.index_of(join) else {
            return Some("join formula leaves the image".to_string());
        };
        if !img.leq(i1, ij) || !img.leq(i2, ij) {
            return Some("join formula result is not an upper bound".to_string());
        }
        for k in 0..img.len() {
            if img.leq(i1, k) && img.leq(i2, k) && !img.leq(ij, k) {
                return Some(format!(
                    "join formula result {} is not the least upper bound",
                    fmt_ac(p, join)
                ));
            }
        }
        None
    };
    'outer: for p in &corpus.posets {
        if !r.check(p, &[], &global_prop) {
            break;
        }
        let img = image_with_fault(p, fault);
        for &b1 in img.blockers() {
            for &b2 in img.blockers() {
                if !r.check(p, &[b1.members(), b2.members()], &pair_prop) {
                    break 'outer;
                }
            }
        }
    }
    r.done()
}

fn suite_preimage(corpus: &Corpus, fault: Fault) -> SuiteOutcome {
    let mut r = Runner::new("preimage-join-closure");
    let pair_prop = move |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let (a1, a2) = (
            as_antichain(p, *sets.first()?)?,
            as_antichain(p, *sets.get(1)?)?,
        );
        let b = fault.blocker(p, a1.members());
        if fault.blocker(p, a2.members()) != b {
            return None;
        }
        let join = antichain_join(p, a1, a2);
        let bj = fault.blocker(p, join.members());
        (bj != b).then(|| {
            format!(
                "join {} of two preimage members maps to {}, not {}",
                fmt_ac(p, join),
                fmt_ac(p, bj),
                fmt_ac(p, b)
            )
        })
    };
    let greatest_prop = move |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let b = as_antichain(p, *sets.first()?)?;
        let img = image_with_fault(p, fault);
        img.index_of(b)?;
        let g = fault.blocker(p, b.members());
        if fault.blocker(p, g.members()) != b {
            return Some(format!(
                "the blocker {} of an image member does not map back to it",
                fmt_ac(p, g)
            ));
        }
        for a in antichains_of(p) {
            if fault.blocker(p, a.members()) == b && !antichain_leq(p, a, g) {
                return Some(format!(
                    "preimage member {} is not below the blocker {}",
                    fmt_ac(p, a),
                    fmt_ac(p, g)
                ));
            }
        }
        None
    };
    'outer: for p in &corpus.posets {
        let img = image_with_fault(p, fault);
        for (idx, &b) in img.blockers().iter().enumerate() {
            if !r.check(p, &[b.members()], &greatest_prop) {
                break 'outer;
            }
            let pre = img.preimage(idx);
            for &a1 in pre {
                for &a2 in pre {
                    if !r.check(p, &[a1.members(), a2.members()], &pair_prop) {
                        break 'outer;
                    }
                }
            }
        }
    }
    r.done()
}

fn suite_fixed_point(corpus: &Corpus, fault: Fault) -> SuiteOutcome {
    let mut r = Runner::new("fixed-point-identity");
    let prop = move |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let a = as_antichain(p, *sets.first()?)?;
        if a.is_empty() || a == Antichain::singleton(p.zero()) {
            return None;
        }
        // meet over the members of the joins of the singleton blockers
        let mut acc: Option<Antichain> = None;
        for x in a.members().iter() {
            let bx = fault.blocker(p, ElementSet::singleton(x));
            let mut joined: Option<Antichain> = None;
            for e in bx.members().iter() {
                let single = Antichain::singleton(e);
                joined = Some(match joined {
                    None => single,
                    Some(j) => antichain_join(p, j, single),
                });
            }
            let joined = joined?;
            acc = Some(match acc {
                None => joined,
                Some(m) => antichain_meet(p, m, joined),
            });
        }
        let rhs = acc?;
        let beta = fault.blocker(p, a.members());
        (rhs != beta).then(|| {
            format!(
                "lattice expression gives {} but the blocker of {} is {}",
                fmt_ac(p, rhs),
                fmt_ac(p, a),
                fmt_ac(p, beta)
            )
        })
    };
    'outer: for p in &corpus.posets {
        for a in antichains_of(p) {
            if a.is_empty() || a == Antichain::singleton(p.zero()) {
                continue;
            }
            if !r.check(p, &[a.members()], &prop) {
                break 'outer;
            }
        }
    }
    r.done()
}

fn suite_complementary_isomorphism(corpus: &Corpus, fault: Fault) -> SuiteOutcome {
    let mut r = Runner::new("complementary-isomorphism");
    let global_prop = move |p: &Poset, _: &[ElementSet]| -> Option<String> {
        let img = image_with_fault(p, fault);
        let images: std::collections::BTreeSet<Antichain> = img
            .blockers()
            .iter()
            .map(|&b| complementary(p, b.members()))
            .collect();
        (images.len() != img.len())
            .then(|| "the complementary map is not injective on blockers".to_string())
    };
    let pair_prop = move |p: &Poset, sets: &[ElementSet]| -> Option<String> {
        let (b1, b2) = (
            as_antichain(p, *sets.first()?)?,
            as_antichain(p, *sets.get(1)?)?,
        );
        let img = image_with_fault(p, fault);
        let (Some(i1), Some(i2)) = (img.index_of(b1), img.index_of(b2)) else {
            return None;
        };
        let (c1, c2) = (
            complementary(p, b1.members()),
            complementary(p, b2.members()),
        );
        (img.leq(i1, i2) != ideal_order_leq(p, c1, c2)).then(|| {
            format!(
                "complementary images {} and {} do not mirror the blocker order",
                fmt_ac(p, c1),
                fmt_ac(p, c2)
            )
        })
    };
    'outer: for p in &corpus.posets {
        if !r.check(p, &[], &global_prop) {
            break;
        }
        let img = image_with_fault(p, fault);
        for &b1 in img.blockers() {
            for &b2 in img.blockers() {
                if !r.check(p, &[b1.members(), b2.members()], &pair_prop) {
                    break 'outer;
                }
            }
        }
    }
    r.done()
}

fn suite_map_inclusion(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("map-intersecter-inclusion");
    'outer: for (mi, m) in corpus.maps.iter().enumerate() {
        let m = m.clone();
        let prop = move |p: &Poset, sets: &[ElementSet]| -> Option<String> {
            if p != m.source() {
                return None;
            }
            let a1 = *sets.first()? & p.universe();
            match map_preserves_intersecters(&m, a1) {
                Ok(true) | Err(_) => None,
                Ok(false) => Some(format!(
                    "image of the intersecters of {} leaves the intersecters of the image",
                    format_subset(p, a1)
                )),
            }
        };
        let source = corpus.maps[mi].source().clone();
        for a1 in subset_space(&source, corpus.seed ^ (0x3A9 + mi as u64)) {
            if !r.check(&source, &[a1], &prop) {
                break 'outer;
            }
        }
    }
    r.done()
}

// ---------------------------------------------------------------------
// clutter suites

fn clutter_line(c: &Clutter) -> String {
    format!(
        "clutter over {{1..{}}}: {}",
        c.ground_size(),
        crate::parse::format_clutter(c)
    )
}

fn suite_double_blocker(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("clutter-double-blocker");
    for c in &corpus.clutters {
        if !r.running() {
            break;
        }
        let twice = c.blocker().blocker();
        if twice != *c {
            r.fail_other(
                clutter_line(c),
                format!(
                    "double blocker came back as {}",
                    crate::parse::format_clutter(&twice)
                ),
            );
        } else {
            r.pass();
        }
    }
    r.done()
}

fn suite_sperner_reduction(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("clutter-sperner-reduction");
    let mut rng = SplitMix64::new(corpus.seed ^ 0x5BE);
    for _ in 0..200 {
        if !r.running() {
            break;
        }
        let ground = 1 + rng.below(4);
        let candidates = (1usize << ground) - 1;
        let family: Vec<ElementSet> = (0..1 + rng.below(2 * candidates))
            .map(|_| ElementSet::from_bits(1 + rng.below(candidates) as u64))
            .collect();
        let raw = minimal_blocking_sets(ElementSet::full(ground), &family);
        let reduced = Clutter::from_family(ground, &family).expect("reduction is Sperner");
        let via_reduced = minimal_blocking_sets(ElementSet::full(ground), reduced.sets());
        if raw != via_reduced {
            r.fail_other(
                format!("family {family:?} over {{1..{ground}}}"),
                "blocker of the family differs from the blocker of its reduction".to_string(),
            );
        } else {
            r.pass();
        }
    }
    r.done()
}

fn suite_boolean_bridge(corpus: &Corpus, fault: Fault) -> SuiteOutcome {
    let mut r = Runner::new("boolean-bridge");
    'outer: for n in 1..=3usize {
        let lattice = boolean_lattice(n).expect("in envelope");
        let prop = {
            let reference = lattice.clone();
            move |p: &Poset, sets: &[ElementSet]| -> Option<String> {
                if *p != reference {
                    return None;
                }
                let a = as_antichain(p, *sets.first()?)?;
                let g = crate::clutter::clutter_from_antichain(n, a).ok()?;
                let classical = antichain_from_clutter(n, &g.blocker()).ok()?;
                let through_poset = fault.blocker(p, a.members());
                (classical != through_poset).then(|| {
                    format!(
                        "classical blocker corresponds to {} but the poset blocker is {}",
                        fmt_ac(p, classical),
                        fmt_ac(p, through_poset)
                    )
                })
            }
        };
        for a in antichains_of(&lattice) {
            if !r.check(&lattice, &[a.members()], &prop) {
                break 'outer;
            }
        }
    }
    // the corpus clutters at ground 4 exercise the classical side beyond
    // the lattice envelope used above
    for c in corpus.clutters.iter().filter(|c| c.ground_size() == 4) {
        if !r.running() {
            break;
        }
        if c.blocker().blocker() != *c {
            r.fail_other(
                clutter_line(c),
                "double blocker failed at ground 4".to_string(),
            );
        } else {
            r.pass();
        }
    }
    r.done()
}

// ---------------------------------------------------------------------
// product suites

/// Per-element intersecter witnesses: `sb[b]` collects the elements whose
/// ideal shares an atom with the ideal of `b`. Folding these reproduces
/// the definitional scan.
fn intersecter_witnesses(q: &Poset) -> Vec<ElementSet> {
    (0..q.n())
        .map(|b| {
            let b_atoms = q.down_set(b) & q.atoms();
            (0..q.n())
                .filter(|&a| b_atoms.intersects(q.down_set(a)))
                .collect()
        })
        .collect()
}

fn direct_intersecters(q: &Poset, witnesses: &[ElementSet], a: ElementSet) -> ElementSet {
    let targets = a.without(q.zero());
    if targets.is_empty() {
        return if a.is_empty() {
            q.universe()
        } else {
            ElementSet::EMPTY
        };
    }
    (0..q.n())
        .filter(|&b| targets.is_subset(witnesses[b]))
        .collect()
}

/// Checks the full-product closed form against the definitional scan for
/// one factor pair: exhaustively when the subset space is within
/// `1 << exhaustive_bits`, sampled otherwise. Returns the number of
/// subsets checked, or a shrunken failure.
pub fn check_full_product_pair(
    p1: &Poset,
    p2: &Poset,
    exhaustive_bits: usize,
    samples: usize,
    seed: u64,
) -> std::result::Result<u64, Box<Failure>> {
    let Ok(q) = p1.cartesian_product(p2) else {
        return Ok(0);
    };
    let witnesses = intersecter_witnesses(&q);
    // terms of the closed form, hoisted out of the subset loop
    let n2 = p2.n();
    let terms: Vec<ElementSet> = (0..q.n())
        .map(|id| {
            let (a1, a2) = q.product_pair(id).expect("full product");
            let i1 = intersecters(p1, ElementSet::singleton(a1));
            let i2 = intersecters(p2, ElementSet::singleton(a2));
            let mut t = ElementSet::EMPTY;
            for x1 in 0..p1.n() {
                for x2 in 0..n2 {
                    if i1.contains(x1) || i2.contains(x2) {
                        t = t.with(x1 * n2 + x2);
                    }
                }
            }
            t
        })
        .collect();
    let zero_bit = 1u64 << q.zero();
    let evaluate = |a: ElementSet| -> bool {
        let formula = a.iter().fold(q.universe(), |acc, id| acc & terms[id]);
        formula == direct_intersecters(&q, &witnesses, a)
    };
    let report = |a: ElementSet| -> Box<Failure> {
        let (p1, p2) = (p1.clone(), p2.clone());
        let prop = move |qq: &Poset, sets: &[ElementSet]| -> Option<String> {
            let q_real = p1.cartesian_product(&p2).ok()?;
            if *qq != q_real {
                return None;
            }
            let a = *sets.first()?;
            let formula = crate::product::intersecters_full_product(&p1, &p2, a).ok()?;
            let direct = intersecters(qq, a);
            (formula != direct).then(|| {
                format!(
                    "closed form {} vs direct scan {}",
                    format_subset(qq, formula),
                    format_subset(qq, direct)
                )
            })
        };
        let (sp, ss, detail) = shrink(q.clone(), vec![a], &prop);
        Box::new(Failure {
            subject: Subject::Instance {
                poset: sp,
                sets: ss,
            },
            detail,
        })
    };
    let mut checks = 0;
    if q.n() <= exhaustive_bits + 1 {
        for bits in 1..1u64 << q.n() {
            if bits & zero_bit != 0 {
                continue;
            }
            checks += 1;
            let a = ElementSet::from_bits(bits);
            if !evaluate(a) {
                return Err(report(a));
            }
        }
    } else {
        let mut rng = SplitMix64::new(seed);
        for _ in 0..samples {
            let mut bits = rng.next_u64() & q.universe().bits() & !zero_bit;
            if bits == 0 {
                bits = 1u64 << q.one();
            }
            checks += 1;
            let a = ElementSet::from_bits(bits);
            if !evaluate(a) {
                return Err(report(a));
            }
        }
    }
    Ok(checks)
}

/// Same pattern for the reduced bounded product and its case split.
pub fn check_reduced_product_pair(
    p1: &Poset,
    p2: &Poset,
    exhaustive_bits: usize,
    samples: usize,
    seed: u64,
) -> std::result::Result<u64, Box<Failure>> {
    let Ok(q) = p1.reduced_bounded_product(p2) else {
        return Ok(0);
    };
    let witnesses = intersecter_witnesses(&q);
    let interior = q.universe().without(q.zero()).without(q.one());
    let evaluate = |a: ElementSet| -> bool {
        let Ok((full, minimal)) = crate::product::intersecters_reduced_product(p1, p2, a) else {
            return false;
        };
        let direct = direct_intersecters(&q, &witnesses, a);
        full == direct && minimal == q.extremes(direct, Extreme::Min)
    };
    let report = |a: ElementSet| -> Box<Failure> {
        let (p1, p2) = (p1.clone(), p2.clone());
        let prop = move |qq: &Poset, sets: &[ElementSet]| -> Option<String> {
            let q_real = p1.reduced_bounded_product(&p2).ok()?;
            if *qq != q_real {
                return None;
            }
            let a = *sets.first()?;
            let (full, minimal) = crate::product::intersecters_reduced_product(&p1, &p2, a).ok()?;
            let direct = intersecters(qq, a);
            if full != direct {
                return Some(format!(
                    "case split gives {} but the direct scan gives {}",
                    format_subset(qq, full),
                    format_subset(qq, direct)
                ));
            }
            let direct_min = qq.extremes(direct, Extreme::Min);
            (minimal != direct_min).then(|| {
                format!(
                    "case split minimum {} vs direct minimum {}",
                    fmt_ac(qq, minimal),
                    fmt_ac(qq, direct_min)
                )
            })
        };
        let (sp, ss, detail) = shrink(q.clone(), vec![a], &prop);
        Box::new(Failure {
            subject: Subject::Instance {
                poset: sp,
                sets: ss,
            },
            detail,
        })
    };
    let mut checks = 0;
    let interior_ids: Vec<usize> = interior.iter().collect();
    if interior_ids.len() <= exhaustive_bits {
        for compressed in 1..1u64 << interior_ids.len() {
            let a: ElementSet = interior_ids
                .iter()
                .enumerate()
                .filter(|(bit, _)| compressed >> bit & 1 == 1)
                .map(|(_, &id)| id)
                .collect();
            checks += 1;
            if !evaluate(a) {
                return Err(report(a));
            }
        }
    } else {
        let mut rng = SplitMix64::new(seed);
        for _ in 0..samples {
            let mut bits = rng.next_u64() & interior.bits();
            if bits == 0 {
                bits = 1u64 << interior_ids[0];
            }
            checks += 1;
            let a = ElementSet::from_bits(bits);
            if !evaluate(a) {
                return Err(report(a));
            }
        }
    }
    Ok(checks)
}

fn suite_full_product(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("full-product-closed-form");
    let catalog = &corpus.posets[..12.min(corpus.posets.len())];
    'outer: for (i, p1) in catalog.iter().enumerate() {
        for (j, p2) in catalog.iter().enumerate() {
            let seed = corpus.seed ^ ((i * 64 + j) as u64) << 8;
            match check_full_product_pair(p1, p2, 18, 20_000, seed) {
                Ok(n) => r.checks += n,
                Err(f) => {
                    r.checks += 1;
                    r.failure = Some(*f);
                    break 'outer;
                }
            }
        }
    }
    r.done()
}

fn suite_reduced_product(corpus: &Corpus) -> SuiteOutcome {
    let mut r = Runner::new("reduced-product-closed-form");
    let catalog = &corpus.posets[..12.min(corpus.posets.len())];
    'outer: for (i, p1) in catalog.iter().enumerate() {
        for (j, p2) in catalog.iter().enumerate() {
            let seed = corpus.seed ^ ((i * 64 + j) as u64) << 16;
            match check_reduced_product_pair(p1, p2, 16, 5_000, seed) {
                Ok(n) => r.checks += n,
                Err(f) => {
                    r.checks += 1;
                    r.failure = Some(*f);
                    break 'outer;
                }
            }
        }
    }
    r.done()
}

// ---------------------------------------------------------------------
// generator suite

fn suite_generators(corpus: &Corpus, cfg: &VerifyConfig) -> SuiteOutcome {
    let mut r = Runner::new("generator-determinism");
    match Corpus::generate(cfg.seed, cfg.max_middle, cfg.samples) {
        Ok(again) if again == *corpus => r.pass(),
        Ok(_) => {
            r.fail_other(
                format!("seed {}", cfg.seed),
                "regenerating the corpus from the same seed changed it".to_string(),
            );
            return r.done();
        }
        Err(e) => {
            r.fail_other(
                format!("seed {}", cfg.seed),
                format!("regeneration failed: {e}"),
            );
            return r.done();
        }
    }
    for p in &corpus.posets {
        if !r.running() {
            break;
        }
        match Poset::from_cover_relations(p.names().to_vec(), &p.covers()) {
            Ok(round) if round == *p => r.pass(),
            _ => r.fail_other(
                format_poset_file(p),
                "poset does not round-trip through its own cover relations".to_string(),
            ),
        }
    }
    for m in &corpus.maps {
        if !r.running() {
            break;
        }
        if validate_map(m).holds() {
            r.pass();
        } else {
            r.fail_other(
                "a generated map".to_string(),
                "certificate does not hold".to_string(),
            );
        }
    }
    r.done()
}

/// Runs every suite over a corpus generated from the configuration.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SuiteOutcome>> {
    let corpus = Corpus::generate(cfg.seed, cfg.max_middle, cfg.samples)?;
    let fault = cfg.fault;
    Ok(vec![
        suite_closure_idempotence(&corpus),
        suite_hull_and_extremes(&corpus),
        suite_product_atom_laws(&corpus),
        suite_lattice_laws(&corpus),
        suite_order_compatibility(&corpus),
        suite_distributivity(&corpus),
        suite_enumeration(&corpus),
        suite_partition(&corpus),
        suite_min_reduction(&corpus),
        suite_factorization(&corpus),
        suite_formula_equivalence(&corpus),
        suite_filter_ideal_structure(&corpus),
        suite_antitonicity(&corpus, fault),
        suite_involution(&corpus, fault),
        suite_image_structure(&corpus, fault),
        suite_preimage(&corpus, fault),
        suite_fixed_point(&corpus, fault),
        suite_complementary_isomorphism(&corpus, fault),
        suite_map_inclusion(&corpus),
        suite_double_blocker(&corpus),
        suite_sperner_reduction(&corpus),
        suite_boolean_bridge(&corpus, fault),
        suite_reduced_product(&corpus),
        suite_full_product(&corpus),
        suite_generators(&corpus, cfg),
    ])
}
