//! Acceptance suite: one test per advertised guarantee, each printing a
//! pass line with its check count and elapsed time. Everything here is
//! discrete, so every comparison is exact.

use std::process::Command;
use std::time::{Duration, Instant};

use poset_blockers::gen::{b2, catalog, m3, n5, Corpus};
use poset_blockers::verify::{check_full_product_pair, check_reduced_product_pair};
use poset_blockers::{
    antichain_from_clutter, antichain_join, antichain_leq, antichain_meet, blocker, blocker_image,
    clutter_from_antichain, enumerate_antichains, gen::chain, intersecters,
    intersecters_by_clutter_formula, intersecters_by_filter_formula, map_preserves_intersecters,
    Antichain, ElementSet, Poset,
};

fn corpus() -> Corpus {
    Corpus::generate(42, 6, 200).expect("default corpus")
}

fn report(number: u32, name: &str, checks: u64, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("acceptance {number:02} {name}: PASS ({checks} checks, {elapsed:.2?})");
    assert!(
        elapsed <= budget,
        "criterion {number} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

/// Every nonempty antichain avoiding the least element.
fn nontrivial_antichains(p: &Poset) -> Vec<Antichain> {
    enumerate_antichains(p)
        .unwrap()
        .into_iter()
        .filter(|a| !a.is_empty() && !a.members().contains(p.zero()))
        .collect()
}

#[test]
fn c01_intersecter_formula_equivalence() {
    let started = Instant::now();
    let mut checks = 0;
    for p in catalog() {
        for a in nontrivial_antichains(&p) {
            let a = a.members();
            let scan = intersecters(&p, a);
            assert_eq!(scan, intersecters_by_filter_formula(&p, a).unwrap());
            assert_eq!(scan, intersecters_by_clutter_formula(&p, a).unwrap());
            checks += 1;
        }
    }
    report(
        1,
        "intersecter-formula-equivalence",
        checks,
        started,
        Duration::from_secs(5),
    );
}

#[test]
fn c02_blocker_involution() {
    let started = Instant::now();
    let mut checks = 0;
    let corpus = corpus();
    assert!(corpus.posets.len() >= 212);
    for p in &corpus.posets {
        let img = blocker_image(p).unwrap();
        for &b in img.blockers() {
            assert_eq!(
                blocker(p, blocker(p, b.members()).members()),
                b,
                "double blocker moved an image member"
            );
            checks += 1;
        }
    }
    report(
        2,
        "blocker-involution",
        checks,
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn c03_blocker_lattice_structure() {
    let started = Instant::now();
    let mut checks = 0;
    for p in &corpus().posets {
        let img = blocker_image(p).unwrap();
        let blockers = img.blockers();
        let bottom = Antichain::EMPTY;
        let top = Antichain::singleton(p.zero());
        assert!(img.contains(bottom) && img.contains(top));
        for &b in blockers {
            assert!(antichain_leq(p, bottom, b) && antichain_leq(p, b, top));
        }
        // unique atom and coatom
        let atoms = img.image_atoms();
        assert_eq!(atoms.len(), 1, "atom of the image lattice is unique");
        assert_eq!(blockers[atoms[0]], blocker(p, p.atoms()));
        let coatoms = img.image_coatoms();
        assert_eq!(coatoms.len(), 1, "coatom of the image lattice is unique");
        assert_eq!(blockers[coatoms[0]].members(), p.atoms());
        checks += 1;
        for (i1, &b1) in blockers.iter().enumerate() {
            for (i2, &b2) in blockers.iter().enumerate() {
                // meet-closure in the ambient antichain lattice
                let meet = antichain_meet(p, b1, b2);
                assert!(img.contains(meet), "meet left the image");
                assert_eq!(img.meet(b1, b2).unwrap(), meet);
                // the restricted blocker map reverses the order, both ways
                let (m1, m2) = (blocker(p, b1.members()), blocker(p, b2.members()));
                assert_eq!(img.leq(i1, i2), antichain_leq(p, m2, m1));
                // join formula gives the least upper bound in the image
                let join = img.join(b1, b2).unwrap();
                assert_eq!(join, blocker(p, antichain_meet(p, m1, m2).members()));
                let ij = img.index_of(join).expect("join lands in the image");
                assert!(img.leq(i1, ij) && img.leq(i2, ij));
                for k in 0..img.len() {
                    if img.leq(i1, k) && img.leq(i2, k) {
                        assert!(img.leq(ij, k), "join formula missed a smaller upper bound");
                    }
                }
                checks += 1;
            }
        }
    }
    report(
        3,
        "blocker-lattice-structure",
        checks,
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn c04_preimage_join_law() {
    let started = Instant::now();
    let mut checks = 0;
    for p in &corpus().posets {
        let img = blocker_image(p).unwrap();
        for (idx, &b) in img.blockers().iter().enumerate() {
            let pre = img.preimage(idx);
            let greatest = blocker(p, b.members());
            assert!(
                pre.contains(&greatest),
                "the blocker of an image member is in its preimage"
            );
            for &a1 in pre {
                assert!(antichain_leq(p, a1, greatest));
                for &a2 in pre {
                    let join = antichain_join(p, a1, a2);
                    assert_eq!(blocker(p, join.members()), b, "preimage not join-closed");
                    checks += 1;
                }
            }
        }
    }
    report(
        4,
        "preimage-join-law",
        checks,
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn c05_antitonicity_and_reciprocity() {
    let started = Instant::now();
    let mut checks = 0;
    for p in &corpus().posets {
        let ants = enumerate_antichains(p).unwrap();
        let betas: Vec<Antichain> = ants.iter().map(|a| blocker(p, a.members())).collect();
        for (i, &a1) in ants.iter().enumerate() {
            assert!(
                a1.members().is_subset(intersecters(p, betas[i].members())),
                "reciprocity failed"
            );
            for (j, &a2) in ants.iter().enumerate() {
                if antichain_leq(p, a1, a2) {
                    assert!(
                        antichain_leq(p, betas[j], betas[i]),
                        "blocker map not antitone"
                    );
                }
                checks += 1;
            }
        }
    }
    report(
        5,
        "antitonicity-and-reciprocity",
        checks,
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn c06_product_closed_forms() {
    let started = Instant::now();
    let mut checks = 0;
    let factors = [chain(3), chain(4), b2(), n5(), m3()];
    for p1 in &factors {
        for p2 in &factors {
            // exhaustive whenever the product has at most 24 elements,
            // sampled above that
            match check_full_product_pair(p1, p2, 23, 20_000, 0xC6) {
                Ok(n) => checks += n,
                Err(f) => panic!("full product closed form failed:\n{}", f.render()),
            }
            match check_reduced_product_pair(p1, p2, 22, 20_000, 0xC6) {
                Ok(n) => checks += n,
                Err(f) => panic!("reduced product closed form failed:\n{}", f.render()),
            }
        }
    }
    report(
        6,
        "product-closed-forms",
        checks,
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn c07_boolean_bridge() {
    let started = Instant::now();
    let mut checks = 0;
    // exhaustive over every clutter on grounds 1..=3
    for n in 1..=3usize {
        let lattice = poset_blockers::boolean_lattice(n).unwrap();
        for a in enumerate_antichains(&lattice).unwrap() {
            let g = clutter_from_antichain(n, a).unwrap();
            assert_eq!(
                g.blocker().blocker(),
                g,
                "double blocker is not the identity"
            );
            let classical = antichain_from_clutter(n, &g.blocker()).unwrap();
            assert_eq!(
                classical,
                blocker(&lattice, a.members()),
                "bridge does not commute"
            );
            checks += 1;
        }
    }
    // sampled at ground 4
    for seed in 0..100u64 {
        let g = poset_blockers::random_clutter(4, 0xB41D6E ^ seed).unwrap();
        assert_eq!(g.blocker().blocker(), g);
        checks += 1;
    }
    report(
        7,
        "boolean-bridge",
        checks,
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn c08_order_map_inclusion() {
    let started = Instant::now();
    let mut checks = 0;
    let corpus = corpus();
    assert!(
        corpus.maps.len() >= 100,
        "corpus provides at least 100 certified maps"
    );
    for m in corpus.maps.iter().take(100) {
        let n1 = m.source().n();
        for bits in 0..1u64 << n1.min(10) {
            assert!(
                map_preserves_intersecters(m, ElementSet::from_bits(bits)).unwrap(),
                "intersecter image left the target intersecters"
            );
            checks += 1;
        }
    }
    report(
        8,
        "order-map-inclusion",
        checks,
        started,
        Duration::from_secs(10),
    );
}

#[test]
fn c09_desk_scale_numbers() {
    let started = Instant::now();
    // independent oracle: filter all subsets through pairwise incomparability
    let count_by_scan = |p: &Poset| {
        (0..1u64 << p.n())
            .filter(|&bits| p.is_antichain(ElementSet::from_bits(bits)))
            .count()
    };
    let square = b2();
    assert_eq!(count_by_scan(&square), 6);
    assert_eq!(enumerate_antichains(&square).unwrap().len(), 6);
    assert_eq!(blocker_image(&square).unwrap().len(), 6);

    let pentagon = n5();
    assert_eq!(count_by_scan(&pentagon), 8);
    assert_eq!(enumerate_antichains(&pentagon).unwrap().len(), 8);
    let img = blocker_image(&pentagon).unwrap();
    let ac = |labels: &[&str]| {
        Antichain::new(
            &pentagon,
            labels
                .iter()
                .map(|l| pentagon.id_of(l).unwrap())
                .collect::<ElementSet>(),
        )
        .unwrap()
    };
    let expected = vec![
        ac(&[]),
        ac(&["0"]),
        ac(&["x"]),
        ac(&["y"]),
        ac(&["1"]),
        ac(&["x", "y"]),
    ];
    assert_eq!(img.blockers(), expected.as_slice());
    assert_eq!(
        img.preimage_of(ac(&["x"])).unwrap(),
        &[ac(&["x"]), ac(&["z"])]
    );
    report(9, "desk-scale-numbers", 6, started, Duration::from_secs(5));
}

#[test]
fn c10_verify_cli_end_to_end() {
    let started = Instant::now();
    let bin = env!("CARGO_BIN_EXE_poset-blockers");
    let clean = Command::new(bin)
        .arg("verify")
        .output()
        .expect("binary runs");
    assert_eq!(
        clean.status.code(),
        Some(0),
        "verify with defaults must exit 0"
    );
    let text = String::from_utf8(clean.stdout).unwrap();
    assert!(text.contains("verify: all 25 suites passed"));

    let faulty = Command::new(bin)
        .args(["verify", "--samples", "0", "--inject-fault", "blocker-max"])
        .output()
        .expect("binary runs");
    assert_eq!(faulty.status.code(), Some(3), "injected fault must exit 3");
    let text = String::from_utf8(faulty.stdout).unwrap();
    assert!(
        text.contains("counterexample"),
        "missing counterexample report"
    );
    let elements_line = text
        .lines()
        .find_map(|l| l.trim().strip_prefix("elements: "))
        .expect("counterexample prints the poset elements");
    assert!(
        elements_line.split_whitespace().count() <= 4,
        "counterexample was not shrunk: {elements_line}"
    );
    assert!(
        text.lines().any(|l| l.trim().starts_with("covers: ")),
        "counterexample prints the poset covers"
    );
    report(
        10,
        "verify-cli-end-to-end",
        2,
        started,
        Duration::from_secs(120),
    );
}
