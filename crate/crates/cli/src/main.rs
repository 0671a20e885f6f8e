//! `kronecker`: command-line front-end for `kronecker-core`.
//!
//! Exit codes: 0 success (or a positive `check` verdict), 1 negative `check`
//! verdict, 2 usage or input error, 3 internal consistency failure.

mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::{CommandError, Report};

#[derive(Debug, Parser)]
#[command(name = "kronecker", version, about = "Monic integer polynomials with all roots in the unit disc")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Lift the default size limits on enumeration.
    #[arg(long, global = true)]
    guard_override: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Partition,
    Series,
    Enumerate,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateMethod {
    Canonical,
    Brute,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of Kronecker polynomials of degree n.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = CountMethod::All)]
        method: CountMethod,
    },
    /// List every Kronecker polynomial of degree n with its factorization.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = EnumerateMethod::Canonical)]
        method: EnumerateMethod,
    },
    /// Decide whether a monic polynomial (ascending coefficients) is Kronecker.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// The n-th cyclotomic polynomial.
    Cyclotomic {
        #[arg(long)]
        n: u64,
    },
    /// All n with phi(n) = j.
    InvTotient {
        #[arg(long)]
        j: u64,
    },
    /// The polynomial whose roots are the k-th powers of the roots of poly.
    PowerMap {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        k: usize,
    },
}

fn run(cli: &Cli) -> Result<(&'static str, Report), CommandError> {
    let guard = cli.guard_override;
    Ok(match &cli.command {
        Command::Count { n, method } => ("count", commands::count(*n, *method, guard)?),
        Command::Enumerate { n, method } => ("enumerate", commands::enumerate(*n, *method, guard)?),
        Command::Check { poly } => ("check", commands::check(poly)?),
        Command::Cyclotomic { n } => ("cyclotomic", commands::cyclotomic(*n)?),
        Command::InvTotient { j } => ("inv-totient", commands::inv_totient(*j)?),
        Command::PowerMap { poly, k } => ("power-map", commands::power_map(poly, *k)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, report) = match run(&cli) {
        Ok(r) => r,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(err.exit_code());
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut out = std::io::stdout().lock();
    let written = match cli.format {
        Format::Text => out.write_all(report.text.as_bytes()),
        Format::Json => {
            let envelope = json!({
                "command": name,
                "inputs": report.inputs,
                "result": report.result,
                "elapsed_ms": elapsed_ms,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&envelope).expect("JSON values serialize"))
        }
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code)
}
