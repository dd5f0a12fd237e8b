//! `bigamma`: evaluate, tabulate, expand and verify Γ(x,z) from the shell.
//!
//! Exit codes: 0 success, 1 usage or unknown input, 2 math-domain error.

mod commands;
mod parse;
mod record;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

#[derive(Parser, Debug)]
#[command(
    name = "bigamma",
    version,
    about = "The two-variable gamma function Γ(x,z)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate Γ(x,z) at one point.
    Eval(EvalArgs),
    /// Evaluate Γ(x,z) over a grid and emit CSV or JSON.
    Table(TableArgs),
    /// Run identity checks from the registry.
    Verify(VerifyArgs),
    /// Print Taylor coefficients in z about z=1 or in x about x=1.
    Series(SeriesArgs),
}

#[derive(Args, Debug, Clone, Copy)]
struct Truncation {
    /// Directly summed product terms (default 10000, or $BIGAMMA_MAX_TERMS).
    #[arg(long)]
    max_terms: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Weierstrass,
    EulerLimit,
    EulerProduct,
    Stirling,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long, value_parser = parse::parse_complex, allow_hyphen_values = true)]
    x: Complex64,
    #[arg(long, value_parser = parse::parse_complex, allow_hyphen_values = true)]
    z: Complex64,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    #[command(flatten)]
    truncation: Truncation,
    /// Warn on stderr when the error estimate exceeds this.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// `a:b:step` or a fixed complex value.
    #[arg(long, allow_hyphen_values = true)]
    x_range: String,
    #[arg(long, allow_hyphen_values = true)]
    z_range: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    #[command(flatten)]
    truncation: Truncation,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity id; repeat for several. Default: the whole registry.
    #[arg(long = "id")]
    ids: Vec<String>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Grid size for every selected identity.
    #[arg(long)]
    points: Option<usize>,
    #[command(flatten)]
    truncation: Truncation,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesVar {
    Z,
    X,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    /// `z`: coefficients a_m(x) of Γ(x,z+1) with x=anchor.
    /// `x`: coefficients b_m(z) of Γ(x+1,z) in (x−1) with z=anchor.
    #[arg(long, value_enum)]
    var: SeriesVar,
    #[arg(long, value_parser = parse::parse_complex, allow_hyphen_values = true)]
    anchor: Complex64,
    #[arg(long, default_value_t = bigamma::series::DEFAULT_ORDER)]
    order: usize,
    /// Use the recursions exactly as printed instead of the corrected ones.
    #[arg(long)]
    paper_literal: bool,
    #[command(flatten)]
    truncation: Truncation,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Eval(a) => commands::eval(a),
        Command::Table(a) => commands::table(a),
        Command::Verify(a) => commands::verify(a),
        Command::Series(a) => commands::series(a),
    };
    ExitCode::from(code)
}
