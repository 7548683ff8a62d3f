//! Command-line surface: parse poset and clutter inputs, compute
//! blockers and blocker images, evaluate the product closed forms, and
//! run the verification suites.
//!
//! Exit codes: 0 success, 1 file parse/validation error, 2 semantic
//! input error, 3 property violation reported by `verify`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use poset_blockers::dot::{antichain_lattice_dot, blocker_image_dot, poset_dot};
use poset_blockers::parse::{
    format_antichain, format_clutter, format_subset, parse_antichain, parse_clutter,
    parse_poset_file, parse_subset,
};
use poset_blockers::verify::{run_all, Fault, VerifyConfig};
use poset_blockers::{
    blocker, blocker_image, complementary, enumerate_antichains, intersecters_full_product,
    intersecters_reduced_product, Poset,
};

#[derive(Parser)]
#[command(
    name = "poset-blockers",
    version,
    about = "Blockers of antichains in finite bounded posets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProductMode {
    Full,
    Reduced,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a poset file and print a summary
    Check {
        file: PathBuf,
        /// Write the Hasse diagram in DOT format
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compute the blocker of an antichain
    Blocker {
        file: PathBuf,
        /// Comma-separated labels; `-` is the empty antichain
        #[arg(long)]
        antichain: String,
    },
    /// Compute the complementary antichain of an antichain
    Complementary {
        file: PathBuf,
        #[arg(long)]
        antichain: String,
    },
    /// Enumerate antichains, compute the lattice of blockers, and report it
    Image {
        file: PathBuf,
        /// Write the Hasse diagram of the lattice of blockers in DOT format
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the Hasse diagram of the whole antichain lattice in DOT format
        #[arg(long)]
        ant_dot: Option<PathBuf>,
    },
    /// Evaluate the closed-form intersecter sets on a product of two posets
    Product {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_enum)]
        mode: ProductMode,
        /// Comma-separated product elements, e.g. `(m;a),(m;b)`
        #[arg(long)]
        subset: String,
    },
    /// Compute the classical blocker of a clutter
    ClutterBlocker {
        /// Ground set size; elements are 1..=ground
        #[arg(long)]
        ground: usize,
        /// Members separated by `;`, elements by `,`; `-` empty clutter, `0` the clutter {{}}
        #[arg(long)]
        sets: String,
    },
    /// Run every property suite over a seeded corpus
    Verify {
        /// Largest interior size of the random posets
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Number of random posets (and of random ground-4 clutters)
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Corrupt the blocker map on purpose to exercise the reporting
        /// (`blocker-max` or `blocker-union`)
        #[arg(long)]
        inject_fault: Option<String>,
    },
}

/// Failures while loading an input file.
const EXIT_PARSE: u8 = 1;
/// Well-formed invocation with semantically invalid arguments.
const EXIT_SEMANTIC: u8 = 2;
/// A property suite found a violation.
const EXIT_VIOLATION: u8 = 3;

struct Bail {
    code: u8,
    message: String,
}

fn bail(code: u8, message: impl Into<String>) -> Bail {
    Bail {
        code,
        message: message.into(),
    }
}

fn load_poset(path: &Path) -> Result<Poset, Bail> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| bail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    parse_poset_file(&text).map_err(|e| bail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn write_output(path: &Path, content: &str) -> Result<(), Bail> {
    std::fs::write(path, content).map_err(|e| bail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(b) => {
            eprintln!("error: {}", b.message);
            ExitCode::from(b.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Bail> {
    match command {
        Command::Check { file, dot } => {
            let p = load_poset(&file)?;
            println!("elements: {}", p.n());
            println!("zero: {}", p.name(p.zero()));
            println!("one: {}", p.name(p.one()));
            println!("atoms: {}", format_subset(&p, p.atoms()));
            if let Some(path) = dot {
                write_output(&path, &poset_dot(&p))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Blocker { file, antichain } => {
            let p = load_poset(&file)?;
            let a =
                parse_antichain(&p, &antichain).map_err(|e| bail(EXIT_SEMANTIC, e.to_string()))?;
            println!("{}", format_antichain(&p, blocker(&p, a.members())));
            Ok(ExitCode::SUCCESS)
        }
        Command::Complementary { file, antichain } => {
            let p = load_poset(&file)?;
            let a =
                parse_antichain(&p, &antichain).map_err(|e| bail(EXIT_SEMANTIC, e.to_string()))?;
            println!("{}", format_antichain(&p, complementary(&p, a.members())));
            Ok(ExitCode::SUCCESS)
        }
        Command::Image { file, dot, ant_dot } => {
            let p = load_poset(&file)?;
            let antichains =
                enumerate_antichains(&p).map_err(|e| bail(EXIT_SEMANTIC, e.to_string()))?;
            let img = blocker_image(&p).map_err(|e| bail(EXIT_SEMANTIC, e.to_string()))?;
            println!("antichains: {}", antichains.len());
            println!("blockers: {}", img.len());
            let describe = |ids: &[usize]| {
                ids.iter()
                    .map(|&i| format_antichain(&p, img.blockers()[i]))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("atom: {}", describe(&img.image_atoms()));
            println!("coatom: {}", describe(&img.image_coatoms()));
            for (i, &b) in img.blockers().iter().enumerate() {
                println!(
                    "blocker {} preimage {}",
                    format_antichain(&p, b),
                    img.preimage(i).len()
                );
            }
            if let Some(path) = dot {
                write_output(&path, &blocker_image_dot(&img))?;
            }
            if let Some(path) = ant_dot {
                write_output(&path, &antichain_lattice_dot(&p, &antichains))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Product {
            file1,
            file2,
            mode,
            subset,
        } => {
            let p1 = load_poset(&file1)?;
            let p2 = load_poset(&file2)?;
            let q = match mode {
                ProductMode::Full => p1.cartesian_product(&p2),
                ProductMode::Reduced => p1.reduced_bounded_product(&p2),
            }
            .map_err(|e| bail(EXIT_SEMANTIC, e.to_string()))?;
            let a = parse_subset(&q, &subset).map_err(|e| bail(EXIT_SEMANTIC, e.to_string()))?;
            match mode {
                ProductMode::Full => {
                    let i = intersecters_full_product(&p1, &p2, a)
                        .map_err(|e| bail(EXIT_SEMANTIC, e.to_string()))?;
                    println!("intersecters: {}", format_subset(&q, i));
                    println!(
                        "minimal: {}",
                        format_antichain(&q, q.extremes(i, poset_blockers::Extreme::Min))
                    );
                }
                ProductMode::Reduced => {
                    let (i, min) = intersecters_reduced_product(&p1, &p2, a)
                        .map_err(|e| bail(EXIT_SEMANTIC, e.to_string()))?;
                    println!("intersecters: {}", format_subset(&q, i));
                    println!("minimal: {}", format_antichain(&q, min));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ClutterBlocker { ground, sets } => {
            let c = parse_clutter(ground, &sets).map_err(|e| bail(EXIT_SEMANTIC, e.to_string()))?;
            println!("{}", format_clutter(&c.blocker()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_size,
            samples,
            seed,
            inject_fault,
        } => {
            let fault = match inject_fault {
                None => Fault::None,
                Some(name) => Fault::parse(&name).ok_or_else(|| {
                    bail(
                        EXIT_SEMANTIC,
                        format!("unknown fault `{name}`; expected one of {:?}", Fault::NAMES),
                    )
                })?,
            };
            let cfg = VerifyConfig {
                seed,
                max_middle: max_size,
                samples,
                fault,
            };
            let outcomes = run_all(&cfg).map_err(|e| bail(EXIT_SEMANTIC, e.to_string()))?;
            let mut failed = Vec::new();
            for o in &outcomes {
                let verdict = if o.passed() { "ok" } else { "FAIL" };
                println!("suite {:<32} {:>9} checks  {}", o.name, o.checks, verdict);
                if let Some(f) = &o.failure {
                    failed.push((o.name, f.clone()));
                }
            }
            if let Some((name, failure)) = failed.first() {
                println!("counterexample ({name}):");
                print!("{}", failure.render());
                println!(
                    "verify: {} of {} suites failed",
                    failed.len(),
                    outcomes.len()
                );
                Ok(ExitCode::from(EXIT_VIOLATION))
            } else {
                println!("verify: all {} suites passed", outcomes.len());
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}
