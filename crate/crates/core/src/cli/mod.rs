//! Command-line front end.
//!
//! Exit codes: 0 on success (or a feasible `decide`), 1 when `decide` finds
//! no subset, 2 on usage, parse or input errors.

mod format;
mod generate;
mod report;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::approx;
use crate::coverage::{self, IntervalSet};
use crate::flow;
use crate::oracle;
use crate::search::{self, Engine};
use crate::solution::{Method, Solution, Work};

pub use format::{Format, Group, InstanceFile, ParseError, Record};
pub use generate::generate_instance;
pub use report::{CoverageSummary, StatsReport, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "covprune", version, about = "Prune intervals to a coverage cap while maximizing minimum coverage")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Io {
    /// Input file (plain `start end` pairs or BED3); stdin when omitted or `-`
    input: Option<PathBuf>,

    /// Input format; detected from the first record when omitted
    #[arg(long)]
    format: Option<Format>,

    /// Write kept intervals here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,

    /// Write line-delimited JSON stats here instead of stderr
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether coverage can be kept within [t, k] everywhere
    Decide {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, allow_negative_numbers = true, value_parser = clap::value_parser!(i64).range(0..))]
        t: i64,
        #[arg(long)]
        engine: Option<Engine>,
        #[command(flatten)]
        io: Io,
    },
    /// Exact optimum per chromosome
    Solve {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long)]
        engine: Option<Engine>,
        #[command(flatten)]
        io: Io,
    },
    /// Fast approximation with minimum coverage >= floor(k/2)/k of optimal
    Approx {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[command(flatten)]
        io: Io,
    },
    /// Coverage summary only
    Stats {
        #[command(flatten)]
        io: Io,
    },
    /// Exhaustive search (small inputs only)
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Raise the size guard to its hard maximum
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        io: Io,
    },
    /// Compare solvers on a generated instance
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Length of the coordinate range intervals are drawn from
        #[arg(long, default_value_t = 1_000_000)]
        span: u64,
        /// Comma-separated subset of generic, tailored, approx, oracle
        #[arg(long, value_delimiter = ',', default_value = "tailored,generic,approx")]
        engines: Vec<String>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Solve(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
}

/// Runs the CLI with `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.exit_code() {
                0 => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("covprune: {e}");
            EXIT_USAGE
        }
    }
}

fn read_input(io: &Io) -> Result<InstanceFile, CliError> {
    let text = match io.input.as_deref() {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)?,
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    Ok(InstanceFile::parse(&text, io.format)?)
}

fn groups_of(file: &InstanceFile) -> Vec<Group> {
    let groups = file.groups();
    if groups.is_empty() {
        vec![Group {
            chrom: None,
            records: Vec::new(),
            set: IntervalSet::default(),
        }]
    } else {
        groups
    }
}

fn open_writer(path: Option<&PathBuf>, fallback: Box<dyn Write>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) if p.as_os_str() != "-" => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        _ => fallback,
    })
}

struct Outcome {
    group: Group,
    solution: Option<Solution>,
    maxcov_before: u64,
    elapsed_ms: f64,
}

fn solve_groups<F>(file: &InstanceFile, mut solver: F) -> Result<Vec<Outcome>, CliError>
where
    F: FnMut(&IntervalSet) -> Result<Option<Solution>, CliError>,
{
    groups_of(file)
        .into_iter()
        .map(|group| {
            let maxcov_before = coverage::maxcov(&group.set);
            let started = Instant::now();
            let solution = solver(&group.set)?;
            Ok(Outcome {
                group,
                solution,
                maxcov_before,
                elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect()
}

fn write_outcomes(file: &InstanceFile, io: &Io, outcomes: &[Outcome], emit_kept: bool) -> Result<(), CliError> {
    let mut out = open_writer(io.output.as_ref(), Box::new(io::stdout().lock()))?;
    let mut stats = open_writer(io.stats.as_ref(), Box::new(io::stderr().lock()))?;
    for o in outcomes {
        let report = StatsReport::new(o.group.chrom.clone(), o.group.set.len(), o.maxcov_before, o.solution.as_ref(), o.elapsed_ms);
        writeln!(stats, "{}", report.to_json_line())?;
        if emit_kept {
            if let Some(sol) = &o.solution {
                file.emit(&mut out, sol.kept.iter().map(|&i| &o.group.records[i]))?;
            }
        }
    }
    out.flush()?;
    stats.flush()?;
    Ok(())
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Decide { k, t, engine, io } => {
            let t = t as u64;
            let file = read_input(&io)?;
            let outcomes = solve_groups(&file, |set| {
                if set.is_empty() {
                    return Ok((t == 0).then(|| Solution::measure(set, Vec::new(), Method::ExactTailored, Work::default())));
                }
                let engine = engine.unwrap_or_else(|| Engine::default_for(set.len(), k));
                Ok(flow::decide(set, k, t, engine.warm_start())?)
            })?;
            let feasible = outcomes.iter().all(|o| o.solution.is_some());
            write_outcomes(&file, &io, &outcomes, feasible)?;
            Ok(if feasible { EXIT_OK } else { EXIT_INFEASIBLE })
        }
        Command::Solve { k, engine, io } => {
            let file = read_input(&io)?;
            let outcomes = solve_groups(&file, |set| {
                let engine = engine.unwrap_or_else(|| Engine::default_for(set.len(), k));
                Ok(Some(search::solve_exact(set, k, engine)?))
            })?;
            write_outcomes(&file, &io, &outcomes, true)?;
            Ok(EXIT_OK)
        }
        Command::Approx { k, io } => {
            let file = read_input(&io)?;
            let outcomes = solve_groups(&file, |set| Ok(Some(approx::approx_prune(set, k)?)))?;
            write_outcomes(&file, &io, &outcomes, true)?;
            Ok(EXIT_OK)
        }
        Command::Oracle { k, force, io } => {
            let file = read_input(&io)?;
            let limit = if force { oracle::HARD_LIMIT } else { oracle::DEFAULT_LIMIT };
            let outcomes = solve_groups(&file, |set| Ok(Some(oracle::brute_force_opt(set, k, limit)?)))?;
            write_outcomes(&file, &io, &outcomes, true)?;
            Ok(EXIT_OK)
        }
        Command::Stats { io } => {
            let file = read_input(&io)?;
            let mut out = open_writer(io.output.as_ref(), Box::new(io::stdout().lock()))?;
            for group in groups_of(&file) {
                writeln!(out, "{}", CoverageSummary::new(group.chrom.clone(), &group.set).to_json_line())?;
            }
            out.flush()?;
            Ok(EXIT_OK)
        }
        Command::Bench { n, k, seed, span, engines } => bench(n as usize, k, seed, span, &engines),
    }
}

fn bench(n: usize, k: u64, seed: u64, span: u64, engines: &[String]) -> Result<i32, CliError> {
    let set = generate_instance(n, span, seed);
    let mut stdout = io::stdout().lock();
    writeln!(
        stdout,
        "# n={n} k={k} seed={seed} span={span} maxcov={} mincov_span={}",
        coverage::maxcov(&set),
        coverage::mincov_span(&set)
    )?;
    writeln!(
        stdout,
        "{:<10} {:>8} {:>8} {:>9} {:>12} {:>12} {:>14} {:>10}",
        "engine", "mincov", "maxcov", "kept", "flow_solves", "augment", "tree_nodes", "ms"
    )?;
    for name in engines {
        let started = Instant::now();
        let sol = match name.trim() {
            "generic" => search::solve_exact(&set, k, Engine::Generic)?,
            "tailored" => search::solve_exact(&set, k, Engine::Tailored)?,
            "approx" => approx::approx_prune(&set, k)?,
            "oracle" => oracle::brute_force_opt(&set, k, oracle::DEFAULT_LIMIT)?,
            other => return Err(CliError::Usage(format!("unknown engine '{other}'"))),
        };
        let ms = started.elapsed().as_secs_f64() * 1e3;
        writeln!(
            stdout,
            "{:<10} {:>8} {:>8} {:>9} {:>12} {:>12} {:>14} {:>10.2}",
            sol.method.as_str(),
            sol.achieved_mincov,
            sol.achieved_maxcov,
            sol.kept.len(),
            sol.work.flow_solves,
            sol.work.augmentations,
            sol.work.tree_nodes,
            ms
        )?;
    }
    Ok(EXIT_OK)
}
