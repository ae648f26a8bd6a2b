//! `borromean`: build, verify, classify and compare representations of the
//! Borromean link group from the command line. All input and output is JSON.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use borromean::Tolerance;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use commands::Failure;

#[derive(Parser, Debug)]
#[command(name = "borromean", version, about = "SL(2,C) characters of the Borromean link group and their twisted Alexander polynomials")]
struct Cli {
    /// Absolute tolerance for equalities.
    #[arg(long, global = true, default_value_t = Tolerance::DEFAULT_ABS)]
    tol: f64,
    /// Relative threshold for dropping polynomial coefficients.
    #[arg(long, global = true, default_value_t = Tolerance::DEFAULT_PRUNE)]
    prune: f64,
    /// Seed for random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Realize a representation on a component; missing parameters are drawn at random.
    Sample(Box<SampleArgs>),
    /// Check relations, irreducibility and trace identities of representations.
    Verify(InputArg),
    /// Characters of representations.
    Char(InputArg),
    /// Components containing characters (or the characters of representations).
    Classify(InputArg),
    /// Twisted Alexander polynomial of representations.
    Tap(TapArgs),
    /// Roots θ of the canonical-component quartic over (t1, t2, t3).
    SolveTheta(SolveThetaArgs),
    /// The pair ±t3 over (t1, t2, θ).
    Cover(CoverArgs),
    /// The holonomy character t1 = t2 = t3 = 2 and its polynomial.
    Holonomy,
}

#[derive(Args, Debug)]
pub struct InputArg {
    /// JSON file, or `-` for stdin.
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    /// `X1+`, `X1-`, `X2`, `X3`, `X4`, or a full label such as `X2_1`.
    pub component: String,
    /// Component index i.
    #[arg(long, short)]
    pub i: Option<usize>,
    /// Draw this many random samples instead of one.
    #[arg(long)]
    pub samples: Option<usize>,
    /// x_{i-1} for X1 components, as a JSON matrix.
    #[arg(long)]
    pub x_prev: Option<String>,
    /// x_{i+1} for X1 components, as a JSON matrix.
    #[arg(long)]
    pub x_next: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa_prev: Option<Complex64>,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa_next: Option<Complex64>,
    /// t_i for X3.
    #[arg(long, allow_hyphen_values = true)]
    pub t_i: Option<Complex64>,
    /// t_{i,i-1} for X3.
    #[arg(long, allow_hyphen_values = true)]
    pub t_prev_pair: Option<Complex64>,
    /// t_{i,i+1} for X3.
    #[arg(long, allow_hyphen_values = true)]
    pub t_next_pair: Option<Complex64>,
    /// t_123 for X3.
    #[arg(long, allow_hyphen_values = true)]
    pub t123: Option<Complex64>,
    /// t1 t2 t3 for X4.
    #[arg(long, num_args = 3, allow_hyphen_values = true)]
    pub t: Option<Vec<Complex64>>,
    /// θ for X4.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "theta_branch")]
    pub theta: Option<Complex64>,
    /// Index into the roots listed by `solve-theta`.
    #[arg(long)]
    pub theta_branch: Option<usize>,
    #[arg(long, value_enum, default_value_t = Branch::Principal)]
    pub kappa_branch: Branch,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Branch {
    Principal,
    Other,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Fox,
    Closed,
    Both,
}

#[derive(Args, Debug)]
pub struct TapArgs {
    /// JSON file, or `-` for stdin.
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Method::Fox)]
    pub method: Method,
    /// Column removed from the Fox Jacobian.
    #[arg(long, default_value_t = 3, conflicts_with = "all_columns")]
    pub column: usize,
    /// Compute with every column and compare the results.
    #[arg(long)]
    pub all_columns: bool,
    /// Component for the closed form; defaults to the representation's own.
    #[arg(long)]
    pub label: Option<String>,
}

#[derive(Args, Debug)]
pub struct SolveThetaArgs {
    #[arg(long, num_args = 3, required = true, allow_hyphen_values = true)]
    pub t: Vec<Complex64>,
}

#[derive(Args, Debug)]
pub struct CoverArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub t1: Complex64,
    #[arg(long, allow_hyphen_values = true)]
    pub t2: Complex64,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Complex64,
}

fn run(cli: &Cli) -> Result<serde_json::Value, Failure> {
    if !(cli.tol > 0.0 && cli.prune > 0.0) {
        return Err(Failure::usage("tolerances must be positive"));
    }
    let tol = Tolerance::new(cli.tol, cli.prune);
    match &cli.command {
        Command::Sample(a) => commands::sample(a, cli.seed, &tol),
        Command::Verify(a) => commands::verify(&a.input, &tol),
        Command::Char(a) => commands::character(&a.input),
        Command::Classify(a) => commands::classify(&a.input, &tol),
        Command::Tap(a) => commands::tap(a, &tol),
        Command::SolveTheta(a) => commands::solve_theta(a, &tol),
        Command::Cover(a) => commands::cover(a, &tol),
        Command::Holonomy => commands::holonomy(&tol),
    }
}

fn emit(cli: &Cli, value: &serde_json::Value) -> Result<(), Failure> {
    let mut text = output::to_json(value, cli.pretty).map_err(|e| Failure::io(e.to_string()))?;
    text.push('\n');
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    let (value, code) = match result {
        Ok(v) => (Some(v), 0),
        Err(f) => {
            eprintln!("error: {}", f.message);
            (f.report, f.code)
        }
    };
    if let Some(v) = value {
        if let Err(f) = emit(&cli, &v) {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    }
    ExitCode::from(code)
}
