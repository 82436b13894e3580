//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input error or failed certificate, 2 when a
//! size guard (poset width, oracle instance size) refuses the run.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use mub::branching_doc::BranchingDoc;
use mub::dot::render_dot;
use mub::generator::generate;
use mub::parallel::solve_with_threads;
use mub::report::{render_bounds_text, render_solve_text, Report};
use mub_core::branching::{uncovered_pairs, verify_branching};
use mub_core::digraph::SubPoset;
use mub_core::oracle::brute_beta;
use mub_core::solver::DEFAULT_MAX_WIDTH;
use mub_core::{BinaryMatrix, ContainmentDigraph, SolveConfig};

#[derive(Parser)]
#[command(
    name = "mub",
    version,
    about = "Minimum uncovering branching solver for binary matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute beta exactly, with an optimal branching and the bound chain
    Solve {
        /// Matrix file
        path: PathBuf,
        /// Print the report as JSON instead of text
        #[arg(long)]
        json: bool,
        /// Poset width limit; falls back to MUB_MAX_WIDTH, then 5
        #[arg(long, value_name = "N")]
        max_width: Option<usize>,
        /// Write the containment digraph with the branching in bold
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Cross-check beta against the brute-force reference
        #[arg(long)]
        oracle: bool,
        /// Worker threads for guess evaluation
        #[arg(long, value_name = "N", default_value_t = 1)]
        threads: usize,
    },
    /// Compute the bound chain only; no width limit applies
    Bounds {
        /// Matrix file
        path: PathBuf,
        /// Print the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Generate a reproducible random matrix
    Gen {
        rows: usize,
        cols: usize,
        /// Probability of a 1, strictly between 0 and 1
        density: f64,
        /// 64-bit generator seed, echoed in the output header
        seed: u64,
        /// Write to a file instead of stdout
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Verify a branching document against a matrix
    Check {
        /// Matrix file
        matrix: PathBuf,
        /// Branching JSON: either a vertices/arcs document or a solve report
        branching: PathBuf,
        /// Print the verdict as JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Usage problems are input errors (exit 1); --help and
            // --version are successful runs.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// Guard refusals exit 2; everything else that errors is an input problem
/// or a failed certificate and exits 1.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<mub_core::Error>() {
        Some(mub_core::Error::WidthGuard { .. } | mub_core::Error::BruteGuard { .. }) => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            path,
            json,
            max_width,
            dot,
            oracle,
            threads,
        } => cmd_solve(&path, json, max_width, dot.as_deref(), oracle, threads),
        Command::Bounds { path, json } => cmd_bounds(&path, json),
        Command::Gen {
            rows,
            cols,
            density,
            seed,
            output,
        } => cmd_gen(rows, cols, density, seed, output.as_deref()),
        Command::Check {
            matrix,
            branching,
            json,
        } => cmd_check(&matrix, &branching, json),
    }
}

/// Prints to stdout, treating a broken pipe (reader went away) as a quiet
/// successful exit instead of a panic.
fn write_stdout(text: &str) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        result => result.context("cannot write to stdout"),
    }
}

fn load_matrix(path: &Path) -> Result<(BinaryMatrix, ContainmentDigraph)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let matrix =
        BinaryMatrix::parse(&text).with_context(|| format!("in {}", path.display()))?;
    let dig = ContainmentDigraph::from_matrix(&matrix)
        .with_context(|| format!("in {}", path.display()))?;
    Ok((matrix, dig))
}

/// --max-width wins over MUB_MAX_WIDTH; both absent means the default.
fn resolve_max_width(flag: Option<usize>) -> Result<usize> {
    if let Some(w) = flag {
        return Ok(w);
    }
    match std::env::var("MUB_MAX_WIDTH") {
        Ok(value) if !value.trim().is_empty() => value
            .trim()
            .parse()
            .with_context(|| format!("MUB_MAX_WIDTH is not a width: {value:?}")),
        _ => Ok(DEFAULT_MAX_WIDTH),
    }
}

fn cmd_solve(
    path: &Path,
    json: bool,
    max_width: Option<usize>,
    dot: Option<&Path>,
    oracle: bool,
    threads: usize,
) -> Result<ExitCode> {
    let (matrix, dig) = load_matrix(path)?;
    let config = SolveConfig {
        max_width: resolve_max_width(max_width)?,
        ..SolveConfig::default()
    };
    let started = Instant::now();
    let sol = solve_with_threads(&dig, &config, threads)?;
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    let bounds = mub_core::full_bounds_report(&dig);
    ensure!(
        bounds.alpha_w <= bounds.ww && bounds.ww <= sol.beta && sol.beta <= bounds.beta_linear,
        "bound chain violated: alpha_w={} ww={} beta={} beta_linear={}",
        bounds.alpha_w,
        bounds.ww,
        sol.beta,
        bounds.beta_linear
    );
    if oracle {
        let reference = brute_beta(&SubPoset::full(&dig))?;
        ensure!(
            reference.beta == sol.beta,
            "oracle disagrees: solver found {}, brute force found {}",
            sol.beta,
            reference.beta
        );
        eprintln!("oracle agreement: beta = {}", reference.beta);
    }
    if let Some(dot_path) = dot {
        std::fs::write(dot_path, render_dot(&dig, Some(&sol.branching)))
            .with_context(|| format!("cannot write {}", dot_path.display()))?;
    }
    let report = Report::solve(matrix.rows(), matrix.cols(), &dig, &bounds, &sol);
    if json {
        write_stdout(&format!("{}\n", report.to_json()))?;
    } else {
        write_stdout(&render_solve_text(&report, &sol.uncovered, elapsed_ms))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(path: &Path, json: bool) -> Result<ExitCode> {
    let (matrix, dig) = load_matrix(path)?;
    let bounds = mub_core::full_bounds_report(&dig);
    ensure!(
        bounds.alpha_w <= bounds.ww && bounds.ww <= bounds.beta_linear,
        "bound chain violated: alpha_w={} ww={} beta_linear={}",
        bounds.alpha_w,
        bounds.ww,
        bounds.beta_linear
    );
    let report = Report::bounds(matrix.rows(), matrix.cols(), &dig, &bounds);
    if json {
        write_stdout(&format!("{}\n", report.to_json()))?;
    } else {
        write_stdout(&render_bounds_text(&report))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(
    rows: usize,
    cols: usize,
    density: f64,
    seed: u64,
    output: Option<&Path>,
) -> Result<ExitCode> {
    let text = generate(rows, cols, density, seed)?;
    match output {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => write_stdout(&text)?,
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CheckOutcome {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    uncovered: Option<u64>,
    issues: Vec<String>,
}

fn cmd_check(matrix_path: &Path, branching_path: &Path, json: bool) -> Result<ExitCode> {
    let (_, dig) = load_matrix(matrix_path)?;
    let text = std::fs::read_to_string(branching_path)
        .with_context(|| format!("cannot read {}", branching_path.display()))?;
    let doc = parse_branching_document(&text)
        .with_context(|| format!("in {}", branching_path.display()))?;
    let branching = doc.to_branching(&dig)?;
    let issues = verify_branching(&dig, &branching, false);
    let outcome = if issues.is_empty() {
        let uncovered = uncovered_pairs(&dig, &branching)?;
        CheckOutcome {
            valid: true,
            uncovered: Some(uncovered.total),
            issues: Vec::new(),
        }
    } else {
        CheckOutcome {
            valid: false,
            uncovered: None,
            issues: issues.iter().map(|i| i.to_string()).collect(),
        }
    };
    if json {
        write_stdout(&format!("{}\n", serde_json::to_string_pretty(&outcome)?))?;
    } else if outcome.valid {
        write_stdout(&format!("valid, uncovered = {}\n", outcome.uncovered.unwrap()))?;
    } else {
        write_stdout(&format!("invalid: {}\n", outcome.issues.join("; ")))?;
    }
    Ok(if outcome.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// A branching file is either a bare vertices/arcs document or a full
/// solve report, recognized by its `witnesses` field.
fn parse_branching_document(text: &str) -> Result<BranchingDoc> {
    let value: serde_json::Value =
        serde_json::from_str(text).context("malformed branching JSON")?;
    if value.get("witnesses").is_some() {
        let report: Report =
            serde_json::from_value(value).context("malformed solve report")?;
        let Some(arcs) = report.witnesses.optimal_branching else {
            bail!("report carries no optimal branching to check");
        };
        return Ok(BranchingDoc {
            vertices: report.vertex_supports,
            arcs,
        });
    }
    BranchingDoc::from_json(text)
}
