//! Command-line surface. Exit codes: 0 success, 1 a verdict came out false
//! (`verify`) or the reflection algorithms disagreed, 2 usage and input
//! errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::covers::GroundSet;
use crate::enumeration::{enumerate_canonical_covers, enumerate_structures, find_counterexample};
use crate::error::Error;
use crate::format::{parse_map, parse_structure, parse_subset, serialize_structure};
use crate::reflection::{initial_structure, join, reflect, verify_bireflection, Algorithm};
use crate::structures::{uniformly_continuous, MerotopicStructure};

#[derive(Debug, Parser)]
#[command(
    name = "merotopy",
    about = "Finite merotopic and nearness spaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print `nearness` or `merotopic`.
    Check { file: PathBuf },
    /// Print the nearness reflection as a structure file.
    Reflect {
        file: PathBuf,
        #[arg(long, default_value = "both")]
        algorithm: Algorithm,
    },
    /// Print the interior of a subset.
    Interior {
        file: PathBuf,
        /// Comma-separated element indices; empty for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Print the join of two structures.
    Join { first: PathBuf, second: PathBuf },
    /// Print the initial structure of a map into a structure.
    Initial {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        codomain: PathBuf,
    },
    /// Print whether a map is uniformly continuous.
    Uc {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        codomain: PathBuf,
    },
    /// Print a count followed by every cover or structure.
    Enumerate(EnumerateArgs),
    /// Verify the reflection's universal property for every structure.
    Verify {
        #[arg(long)]
        n: usize,
        /// Largest codomain swept.
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Search for a map into a non-nearness space with a non-nearness
    /// initial structure.
    Counterexample {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").required(true).multiple(false)))]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, group = "what")]
    covers: bool,
    #[arg(long, group = "what")]
    structures: bool,
}

enum Failure {
    Usage(String),
    Verdict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::AlgorithmDisagreement { .. } | Error::NotMaximal(_) => {
                Failure::Verdict(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(path: &Path) -> Result<MerotopicStructure, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_structure(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Verdict(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Check { file } => {
            let mu = load(&file)?;
            let verdict = if mu.is_nearness() {
                "nearness"
            } else {
                "merotopic"
            };
            writeln!(out, "{verdict}")?;
        }
        Command::Reflect { file, algorithm } => {
            let mu = load(&file)?;
            write!(out, "{}", serialize_structure(&reflect(&mu, algorithm)?))?;
        }
        Command::Interior { file, set } => {
            let mu = load(&file)?;
            let a = parse_subset(mu.ground(), &set)?;
            writeln!(out, "{}", mu.interior(a))?;
        }
        Command::Join { first, second } => {
            let joined = join(&load(&first)?, &load(&second)?)?;
            write!(out, "{}", serialize_structure(&joined))?;
        }
        Command::Initial { map, codomain } => {
            let f = load_map(&map)?;
            let nu = load(&codomain)?;
            write!(out, "{}", serialize_structure(&initial_structure(&f, &nu)?))?;
        }
        Command::Uc {
            map,
            domain,
            codomain,
        } => {
            let f = load_map(&map)?;
            let verdict = uniformly_continuous(&f, &load(&domain)?, &load(&codomain)?)?;
            writeln!(out, "{verdict}")?;
        }
        Command::Enumerate(args) => {
            let ground = GroundSet::new(args.n)?;
            if args.covers {
                let universe = enumerate_canonical_covers(ground)?;
                writeln!(out, "{}", universe.len())?;
                for c in universe.covers() {
                    writeln!(out, "{c}")?;
                }
            } else {
                let all = enumerate_structures(ground)?;
                writeln!(out, "{}", all.len())?;
                for mu in &all {
                    writeln!(out, "{mu}")?;
                }
            }
        }
        Command::Verify { n, bound } => {
            let ground = GroundSet::new(n)?;
            let mut failed = 0;
            let structures = enumerate_structures(ground)?;
            writeln!(
                out,
                "{:<20} {:<20} {:<9} {:>6} {:>6}  result",
                "structure", "reflection", "nearness", "rounds", "cases"
            )?;
            for mu in &structures {
                let report = verify_bireflection(mu, bound)?;
                let cases: usize = report.checks.iter().map(|c| c.cases).sum();
                let result = if report.passed() {
                    "pass".to_string()
                } else {
                    failed += 1;
                    let bad: Vec<&str> = report
                        .checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| c.name)
                        .collect();
                    format!("FAIL ({})", bad.join(", "))
                };
                writeln!(
                    out,
                    "{:<20} {:<20} {:<9} {:>6} {:>6}  {result}",
                    mu.to_string(),
                    report.reflection.to_string(),
                    if mu.is_nearness() { "yes" } else { "no" },
                    report.iterations,
                    cases
                )?;
            }
            writeln!(
                out,
                "{} structures on n={n}, codomains up to {bound}: {} failed",
                structures.len(),
                failed
            )?;
            if failed > 0 {
                return Err(Failure::Verdict(format!("{failed} structures failed")));
            }
        }
        Command::Counterexample { n } => {
            let ground = GroundSet::new(n)?;
            match find_counterexample(ground)? {
                None => writeln!(out, "none")?,
                Some(found) => {
                    writeln!(out, "n={}", found.map.domain().len())?;
                    writeln!(out, "m={}", found.map.codomain().len())?;
                    writeln!(out, "map: {}", found.map)?;
                    for c in found.codomain_structure.basis() {
                        writeln!(out, "nu: {c}")?;
                    }
                    for c in found.initial.basis() {
                        writeln!(out, "mu_f: {c}")?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn load_map(path: &Path) -> Result<crate::structures::SetMap, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_map(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}
