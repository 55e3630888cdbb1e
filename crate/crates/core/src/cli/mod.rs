//! Command-line front end: game files in, reports, CSV sweeps and SVG plots out.
//!
//! Exit status: 0 on success, 2 for unreadable or malformed input, 3 for
//! constraint and domain violations, 4 when a solver fails to converge.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::error::Error as SolverError;
use crate::geom::PayoffPoint;
use crate::models::{basic_game, general_game, normalized_game, GeneralParams, NormalizedParams};

pub mod num;
pub mod plot;
pub mod report;
pub mod spec;
pub mod sweep;

pub use report::{solve_report, Method, SolveOptions, SolveReport};
pub use spec::GameSpec;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Solver(#[from] SolverError),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Solver(SolverError::InvalidInput(_)) => 2,
            CliError::Solver(SolverError::Constraint(_) | SolverError::Domain(_)) => 3,
            CliError::Solver(SolverError::NoConvergence { .. }) => 4,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "coopgame",
    version,
    about = "Cooperative solutions of two-player bimatrix games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a game file (reads standard input when FILE is omitted or "-").
    Solve(SolveArgs),
    /// Write one of the built-in policy games as a game file.
    Model(ModelArgs),
    /// Check the normalized family against its closed form over a grid (CSV).
    Sweep(SweepArgs),
    /// Draw the feasible set and solutions of a game file as SVG.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "all")]
    pub method: Method,
    /// Threat point for Nash bargaining, as u,v.
    #[arg(long, value_parser = parse_pair_comma, allow_hyphen_values = true)]
    pub threat: Option<(f64, f64)>,
    /// Lambda search bracket, as lo,hi.
    #[arg(long = "lambda-bracket", value_parser = parse_pair_comma)]
    pub lambda_bracket: Option<(f64, f64)>,
    /// Bisection tolerance on lambda.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Basic,
    General,
    Normalized,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(value_enum)]
    pub kind: ModelKind,
    /// Public benefit of preemption.
    #[arg(long = "B")]
    pub big_b: Option<f64>,
    /// Private cost of preemption.
    #[arg(long = "c")]
    pub c: Option<f64>,
    /// Private benefit of deterrence.
    #[arg(long = "b")]
    pub b: Option<f64>,
    /// Public cost of deterrence.
    #[arg(long = "C")]
    pub big_c: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    /// Output file (standard output when omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Alpha range, as lo:hi.
    #[arg(long, value_parser = parse_range)]
    pub alpha: (f64, f64),
    /// Beta range, as lo:hi.
    #[arg(long, value_parser = parse_range)]
    pub beta: (f64, f64),
    /// Grid points per axis.
    #[arg(long)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    pub file: Option<PathBuf>,
    #[arg(short, long)]
    pub output: PathBuf,
    /// Threat point for Nash bargaining, as u,v.
    #[arg(long, value_parser = parse_pair_comma, allow_hyphen_values = true)]
    pub threat: Option<(f64, f64)>,
}

fn parse_pair(text: &str, sep: char) -> std::result::Result<(f64, f64), String> {
    let (a, b) = text
        .split_once(sep)
        .ok_or_else(|| format!("expected two numbers separated by '{sep}', got {text:?}"))?;
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| format!("not a finite number: {s:?}"))
    };
    Ok((num(a)?, num(b)?))
}

fn parse_pair_comma(text: &str) -> std::result::Result<(f64, f64), String> {
    parse_pair(text, ',')
}

fn parse_range(text: &str) -> std::result::Result<(f64, f64), String> {
    parse_pair(text, ':')
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::Parse(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}

fn load_spec(path: Option<&Path>, stdin: &mut dyn Read) -> Result<GameSpec, CliError> {
    let text = read_input(path, stdin)?;
    GameSpec::from_json(&text).map_err(|e| CliError::Parse(e.to_string()))
}

fn require(value: Option<f64>, flag: &str) -> Result<f64, CliError> {
    value.ok_or_else(|| CliError::Parse(format!("missing --{flag}")))
}

/// Game file for one of the built-in models.
pub fn model_spec(args: &ModelArgs) -> Result<GameSpec, CliError> {
    let spec = match args.kind {
        ModelKind::Basic => GameSpec::from_bimatrix("basic", &basic_game()),
        ModelKind::General => {
            let p = GeneralParams::new(
                require(args.big_b, "B")?,
                require(args.c, "c")?,
                require(args.b, "b")?,
                require(args.big_c, "C")?,
            )?;
            let name = format!(
                "general(B={}, c={}, b={}, C={})",
                p.public_benefit, p.preempt_cost, p.deter_benefit, p.public_cost
            );
            GameSpec::from_bimatrix(&name, &general_game(&p)?)
        }
        ModelKind::Normalized => {
            let p =
                NormalizedParams::new(require(args.alpha, "alpha")?, require(args.beta, "beta")?)?;
            let name = format!("normalized(alpha={}, beta={})", p.alpha, p.beta);
            GameSpec::from_bimatrix(&name, &normalized_game(&p)?)
        }
    };
    Ok(spec.with_policy_labels())
}

/// Executes one command, writing its primary output to `stdout` (or the
/// requested file).
pub fn run(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Solve(args) => {
            let spec = load_spec(args.file.as_deref(), stdin)?;
            let mut options = SolveOptions {
                threat: args.threat.map(PayoffPoint::from),
                ..SolveOptions::default()
            };
            if let Some(b) = args.lambda_bracket {
                options.lambda_bracket = b;
            }
            if let Some(t) = args.tol {
                options.tol = t;
            }
            let report = solve_report(&spec, args.method, options)?;
            stdout.write_all(report.to_json().as_bytes())?;
        }
        Command::Model(args) => {
            let text = model_spec(&args)?.to_json();
            match &args.output {
                Some(path) => fs::write(path, text)?,
                None => stdout.write_all(text.as_bytes())?,
            }
        }
        Command::Sweep(args) => {
            let rows = sweep::sweep(args.alpha, args.beta, args.steps)?;
            sweep::write_csv(&rows, &mut *stdout)?;
        }
        Command::Plot(args) => {
            let spec = load_spec(args.file.as_deref(), stdin)?;
            let svg = plot::render_svg(&spec, args.threat.map(PayoffPoint::from))?;
            fs::write(&args.output, svg)?;
        }
    }
    stdout.flush()?;
    Ok(())
}
