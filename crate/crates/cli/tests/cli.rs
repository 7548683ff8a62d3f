//! End-to-end checks of the command-line surface: output formats, exit
//! codes, determinism, and the DOT round trip.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_poset-blockers")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn check_summarizes_a_poset() {
    let out = run(&["check", fixture("n5.poset").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "elements: 5\nzero: 0\none: 1\natoms: x,y\n"
    );
}

#[test]
fn blocker_command_matches_the_map() {
    let b2 = fixture("b2.poset");
    let b2 = b2.to_str().unwrap();
    let cases = [
        ("-", "0"),
        ("0", "-"),
        ("1", "a,b"),
        ("a,b", "1"),
        ("a", "a"),
    ];
    for (input, expected) in cases {
        let out = run(&["blocker", b2, "--antichain", input]);
        assert_eq!(code(&out), 0);
        assert_eq!(
            stdout_of(&out),
            format!("{expected}\n"),
            "blocker of {input}"
        );
    }
}

#[test]
fn complementary_command() {
    let b2 = fixture("b2.poset");
    let out = run(&["complementary", b2.to_str().unwrap(), "--antichain", "a"]);
    assert_eq!(stdout_of(&out), "b\n");
    let out = run(&["complementary", b2.to_str().unwrap(), "--antichain", "0"]);
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn exit_codes() {
    // parse failures
    assert_eq!(
        code(&run(&[
            "check",
            fixture("bad_cycle.poset").to_str().unwrap()
        ])),
        1
    );
    assert_eq!(code(&run(&["check", "/no/such/file.poset"])), 1);
    // semantic failures
    let b2 = fixture("b2.poset");
    let out = run(&["blocker", b2.to_str().unwrap(), "--antichain", "a,1"]);
    assert_eq!(code(&out), 2);
    let out = run(&["blocker", b2.to_str().unwrap(), "--antichain", "nope"]);
    assert_eq!(code(&out), 2);
    let out = run(&[
        "product",
        fixture("c2.poset").to_str().unwrap(),
        fixture("c3.poset").to_str().unwrap(),
        "--mode",
        "reduced",
        "--subset",
        "-",
    ]);
    assert_eq!(code(&out), 2);
    let out = run(&["clutter-blocker", "--ground", "2", "--sets", "5"]);
    assert_eq!(code(&out), 2);
    let out = run(&["verify", "--samples", "0", "--inject-fault", "nope"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn image_report_for_n5() {
    let out = run(&["image", fixture("n5.poset").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let expected = "antichains: 8\nblockers: 6\natom: 1\ncoatom: x,y\n\
                    blocker - preimage 1\nblocker 0 preimage 1\nblocker x preimage 2\n\
                    blocker y preimage 1\nblocker 1 preimage 2\nblocker x,y preimage 1\n";
    assert_eq!(stdout_of(&out), expected);
}

#[test]
fn image_report_counts() {
    let out = run(&["image", fixture("b2.poset").to_str().unwrap()]);
    let text = stdout_of(&out);
    assert!(text.starts_with("antichains: 6\nblockers: 6\n"));
    let out = run(&["image", fixture("c2.poset").to_str().unwrap()]);
    let text = stdout_of(&out);
    assert!(text.starts_with("antichains: 3\nblockers: 3\n"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let n5 = fixture("n5.poset");
    let args = ["image", n5.to_str().unwrap()];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let verify_args = [
        "verify",
        "--samples",
        "5",
        "--max-size",
        "3",
        "--seed",
        "11",
    ];
    assert_eq!(run(&verify_args).stdout, run(&verify_args).stdout);
}

#[test]
fn product_commands() {
    let c2 = fixture("c2.poset");
    let out = run(&[
        "product",
        c2.to_str().unwrap(),
        c2.to_str().unwrap(),
        "--mode",
        "full",
        "--subset",
        "(1;1)",
    ]);
    assert_eq!(
        stdout_of(&out),
        "intersecters: (0;1),(1;0),(1;1)\nminimal: (0;1),(1;0)\n"
    );
    let out = run(&[
        "product",
        fixture("c3.poset").to_str().unwrap(),
        fixture("b2.poset").to_str().unwrap(),
        "--mode",
        "reduced",
        "--subset",
        "(m;a)",
    ]);
    assert_eq!(stdout_of(&out), "intersecters: (m;a),1\nminimal: (m;a)\n");
}

#[test]
fn clutter_blocker_command() {
    let cases = [
        ("1;2", "1,2"),
        ("1,2", "1;2"),
        ("-", "0"),
        ("0", "-"),
        ("1,2;1,3", "1;2,3"),
    ];
    for (input, expected) in cases {
        let out = run(&["clutter-blocker", "--ground", "3", "--sets", input]);
        assert_eq!(code(&out), 0, "input {input}");
        assert_eq!(stdout_of(&out), format!("{expected}\n"), "input {input}");
    }
}

#[test]
fn dot_outputs_round_trip() {
    let dir = std::env::temp_dir().join(format!("poset-blockers-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let dot_path = dir.join("n5.dot");
    let out = run(&[
        "check",
        fixture("n5.poset").to_str().unwrap(),
        "--dot",
        dot_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("digraph {\n  rankdir=BT;\n"));
    // rebuild the poset from the emitted edges and compare the order
    let names: Vec<String> = dot
        .lines()
        .filter_map(|l| l.trim().strip_suffix(';'))
        .filter(|l| !l.contains("->") && l.starts_with('"'))
        .map(|l| l.trim_matches('"').to_string())
        .collect();
    let covers: Vec<String> = dot
        .lines()
        .filter_map(|l| l.trim().strip_suffix(';'))
        .filter_map(|l| l.split_once(" -> "))
        .map(|(a, b)| format!("{}<{}", a.trim_matches('"'), b.trim_matches('"')))
        .collect();
    let rebuilt = format!(
        "elements: {}\ncovers: {}\n",
        names.join(" "),
        covers.join(" ")
    );
    let file_path = dir.join("n5-rebuilt.poset");
    std::fs::write(&file_path, rebuilt).unwrap();
    let original = run(&["image", fixture("n5.poset").to_str().unwrap()]);
    let roundtrip = run(&["image", file_path.to_str().unwrap()]);
    assert_eq!(original.stdout, roundtrip.stdout);

    // blocker-image and antichain-lattice diagrams are emitted too
    let img_dot = dir.join("n5-image.dot");
    let ant_dot = dir.join("n5-ant.dot");
    let out = run(&[
        "image",
        fixture("n5.poset").to_str().unwrap(),
        "--dot",
        img_dot.to_str().unwrap(),
        "--ant-dot",
        ant_dot.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let img = std::fs::read_to_string(&img_dot).unwrap();
    assert!(img.contains("\"x,y\""));
    let ant = std::fs::read_to_string(&ant_dot).unwrap();
    assert!(ant.contains("\"y,z\""));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_small_run_passes() {
    let out = run(&["verify", "--samples", "2", "--max-size", "2", "--seed", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("verify: all 25 suites passed"));
    assert_eq!(text.lines().filter(|l| l.starts_with("suite ")).count(), 25);
    assert!(text
        .lines()
        .filter(|l| l.starts_with("suite "))
        .all(|l| l.ends_with("ok")));
}

#[test]
fn verify_catalog_only_passes() {
    let out = run(&["verify", "--samples", "0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("verify: all 25 suites passed"));
}

#[test]
fn verify_rejects_envelope_violations() {
    let out = run(&["verify", "--max-size", "9", "--samples", "1"]);
    assert_eq!(code(&out), 2);
}
