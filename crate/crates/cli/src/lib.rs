//! Front end for the `dim` binary.
//!
//! Exit status is 0 when a DIM exists, 1 when none does, and 2 for usage or
//! input errors. `bench` exits 1 if any row breaks the bound.

pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use dim_core::generate::{family_graph, generate_random_graph, Family, GenerateError, WeightRange};
use dim_core::graph::ParseError;
use dim_core::oracle::OracleError;
use dim_core::search::{solve_with, SearchMode};
use dim_core::{brute_force_solve, parse_graph, Graph};
use rayon::prelude::*;
use thiserror::Error;

use report::{BenchRow, ReportStats, ReportStatus, RunReport};

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_NO_DIM: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Base of the exponential leaf bound checked by `bench`.
pub const LEAF_BASE: f64 = 1.1939;
/// Constant factor of the leaf bound.
pub const LEAF_FACTOR: f64 = 8.0;

pub fn leaf_bound(n: usize) -> f64 {
    LEAF_FACTOR * LEAF_BASE.powi(n as i32)
}

#[derive(Parser, Debug)]
#[command(name = "dim", version, about = "Exact dominating induced matching solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum-weight DIM with a witness and the DIM count
    Solve(FileArgs),
    /// Number of DIMs only
    Count(FileArgs),
    /// Whether any DIM exists
    Exists(FileArgs),
    /// Brute force over all bipartitions (small graphs only)
    Oracle(FileArgs),
    /// Write a seeded G(n, p) instance
    Gen(GenArgs),
    /// Leaf counts against 8 * 1.1939^n over an instance family
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct FileArgs {
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    wmin: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    wmax: f64,
    /// Draw integer weights from wmin..=wmax
    #[arg(long)]
    integer: bool,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// gnp, path, cycle or grid
    #[arg(long)]
    family: Family,
    #[arg(long)]
    nmin: usize,
    #[arg(long)]
    nmax: usize,
    /// Edge probability for gnp
    #[arg(long, default_value_t = 0.2)]
    p: f64,
    /// Seeds 0..K per size
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("--nmin {0} is larger than --nmax {1}")]
    EmptyRange(usize, usize),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit status.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Solve(a) => run_solver(&a, Mode::Solve, out),
        Command::Count(a) => run_solver(&a, Mode::Count, out),
        Command::Exists(a) => run_solver(&a, Mode::Exists, out),
        Command::Oracle(a) => run_solver(&a, Mode::Oracle, out),
        Command::Gen(a) => generate(&a, out),
        Command::Bench(a) => bench(&a, out),
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    parse_graph(&text).map_err(|source| CliError::Parse { path: path.into(), source })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Solve,
    Count,
    Exists,
    Oracle,
}

fn one_based(edges: &[(usize, usize)]) -> Vec<[usize; 2]> {
    edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect()
}

fn run_solver(args: &FileArgs, mode: Mode, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph(&args.file)?;
    let start = Instant::now();
    let (report, k4) = match mode {
        Mode::Oracle => {
            let r = brute_force_solve(&g)?;
            let report = RunReport {
                input: args.file.display().to_string(),
                status: r.status.into(),
                weight: r.min_weight,
                edges: one_based(&r.witness),
                count: r.count.to_string(),
                stats: ReportStats::default(),
                wall_ms: 0.0,
            };
            (report, None)
        }
        _ => {
            let search = if mode == Mode::Solve { SearchMode::Full } else { SearchMode::CountOnly };
            let sol = solve_with(&g, search);
            let report = RunReport {
                input: args.file.display().to_string(),
                status: sol.status.into(),
                weight: sol.min_weight,
                edges: one_based(&sol.witness),
                count: sol.count.to_string(),
                stats: ReportStats::from(&sol.stats),
                wall_ms: 0.0,
            };
            (report, sol.k4)
        }
    };
    let report = RunReport { wall_ms: start.elapsed().as_secs_f64() * 1e3, ..report };

    if args.json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        write_text(&report, mode, k4, out)?;
    }
    Ok(match report.status {
        ReportStatus::Found => EXIT_FOUND,
        ReportStatus::NoDim => EXIT_NO_DIM,
    })
}

fn write_text(r: &RunReport, mode: Mode, k4: Option<[usize; 4]>, out: &mut dyn Write) -> std::io::Result<()> {
    if r.status == ReportStatus::NoDim {
        match k4 {
            Some(q) => writeln!(out, "no DIM (K4 found)\nk4: {} {} {} {}", q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1)?,
            None => writeln!(out, "no DIM")?,
        }
        if mode == Mode::Count {
            writeln!(out, "count: 0")?;
        }
        return Ok(());
    }
    match mode {
        Mode::Exists => writeln!(out, "DIM exists"),
        Mode::Count => writeln!(out, "count: {}", r.count),
        Mode::Solve | Mode::Oracle => {
            let edges: Vec<String> = r.edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
            writeln!(out, "status: found")?;
            writeln!(out, "weight: {}", r.weight.expect("found has a weight"))?;
            writeln!(out, "edges: {}", edges.join(" "))?;
            writeln!(out, "count: {}", r.count)?;
            if mode == Mode::Solve {
                writeln!(out, "nodes: {} leaves: {} max_stack: {}", r.stats.nodes, r.stats.leaves, r.stats.max_stack)?;
            }
            Ok(())
        }
    }
}

fn generate(a: &GenArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let weights = if a.integer {
        if a.wmin.fract() != 0.0 || a.wmax.fract() != 0.0 {
            return Err(GenerateError::NonIntegralBounds(a.wmin, a.wmax).into());
        }
        WeightRange::integer(a.wmin as i64, a.wmax as i64)
    } else {
        WeightRange::real(a.wmin, a.wmax)
    };
    let g = generate_random_graph(a.n, a.p, weights, a.seed)?;
    let kind = if a.integer { "integer" } else { "real" };
    let text = format!(
        "c gnp n={} p={} seed={} weights={}[{}, {}] prng=xoshiro256++\n{}",
        a.n,
        a.p,
        a.seed,
        kind,
        a.wmin,
        a.wmax,
        g.to_dimacs()
    );
    match &a.output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write { path: path.clone(), source })?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

/// Solves every instance of the family for `nmin..=nmax` and seeds
/// `0..seeds`, in parallel across instances. Rows come back in input order.
pub fn bench_rows(family: Family, nmin: usize, nmax: usize, p: f64, seeds: u64) -> Result<Vec<BenchRow>, CliError> {
    if nmin > nmax {
        return Err(CliError::EmptyRange(nmin, nmax));
    }
    let jobs: Vec<(usize, u64)> = (nmin..=nmax).flat_map(|n| (0..seeds).map(move |s| (n, s))).collect();
    let graphs = jobs
        .iter()
        .map(|&(n, seed)| family_graph(family, n, p, WeightRange::UNIT, seed).map(|g| (n, seed, g)))
        .collect::<Result<Vec<_>, _>>()?;
    let name = format!("{family:?}").to_lowercase();
    Ok(graphs
        .into_par_iter()
        .map(|(n, seed, g)| {
            let start = Instant::now();
            let sol = solve_with(&g, SearchMode::Full);
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            let bound = leaf_bound(n);
            let ratio = sol.stats.leaves as f64 / bound;
            BenchRow {
                family: name.clone(),
                n,
                seed,
                status: sol.status.into(),
                leaves: sol.stats.leaves,
                bound,
                ratio,
                pass: ratio <= 1.0,
                wall_ms,
            }
        })
        .collect())
}

fn bench(a: &BenchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = bench_rows(a.family, a.nmin, a.nmax, a.p, a.seeds)?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialize"))?;
    } else {
        writeln!(
            out,
            "{:<7} {:>4} {:>5} {:>6} {:>10} {:>12} {:>12} {:>5}",
            "family", "n", "seed", "status", "leaves", "bound", "ratio", "pass"
        )?;
        for r in &rows {
            let status = if r.status == ReportStatus::Found { "found" } else { "noDim" };
            writeln!(
                out,
                "{:<7} {:>4} {:>5} {:>6} {:>10} {:>12.1} {:>12.3e} {:>5}  {:.2}ms",
                r.family,
                r.n,
                r.seed,
                status,
                r.leaves,
                r.bound,
                r.ratio,
                if r.pass { "ok" } else { "FAIL" },
                r.wall_ms
            )?;
        }
    }
    Ok(if rows.iter().all(|r| r.pass) { 0 } else { 1 })
}
