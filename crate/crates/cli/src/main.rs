use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use equiareal::arith::parse_rational;
use equiareal::{CurveConstants, Rational};
use equiareal_cli::*;

#[derive(Parser)]
#[command(name = "equiareal", version, about = "Equiperimeter, equiareal triangle pairs with perfect-square sides")]
struct Cli {
    /// Output format for the main record.
    #[arg(long, value_enum, global = true, default_value = "structured")]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Structured,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the published pairs and curve constants.
    Verify,
    /// Build the pair for one (p, q, r); integers or fractions like 14/3.
    Pair {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
        p: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
        q: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
        r: Rational,
    },
    /// Scan integer triples with |p| + |q| + |r| <= bound.
    Search {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        #[arg(long, env = WORKERS_ENV)]
        workers: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Walk P + k·G1 + j·G2 for |k| <= K, |j| <= J.
    Generate {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Writes the main record to `out` or stdout.
fn emit(out: Option<&PathBuf>, body: &str) -> Result<(), i32> {
    let result = match out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    result.map_err(|e| {
        eprintln!("error: cannot write output: {e}");
        EXIT_IO
    })
}

fn run(cli: Cli) -> Result<i32, i32> {
    let format = match cli.format {
        FormatArg::Structured => Format::Structured,
        FormatArg::Text => Format::Text,
    };
    match cli.command {
        Command::Verify => {
            let report = cmd_verify(&CurveConstants::published());
            let body = match format {
                Format::Structured => Envelope::new("verify", &report).to_json(),
                Format::Text => report.to_text(),
            };
            emit(None, &body)?;
            Ok(report.exit_code())
        }
        Command::Pair { p, q, r } => {
            let outcome = cmd_pair(p, q, r);
            if let PairOutcome::Solution { solution, .. } = &outcome {
                revalidate([solution.pair()]).map_err(internal)?;
            }
            let body = match format {
                Format::Structured => Envelope::new("pair", &outcome).to_json(),
                Format::Text => outcome.to_text(),
            };
            emit(None, &body)?;
            Ok(outcome.exit_code())
        }
        Command::Search { bound, workers, out } => {
            let workers = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let report = cmd_search(bound, workers);
            revalidate(report.pairs()).map_err(internal)?;
            let summary = search_summary(&report);
            let body = match format {
                Format::Structured => Envelope::new("search", search_output(&report)).to_json(),
                Format::Text => summary.clone(),
            };
            emit(out.as_ref(), &body)?;
            if format == Format::Structured || out.is_some() {
                eprint!("{summary}");
            }
            eprintln!("elapsed {:.2?} on {workers} workers", report.elapsed);
            Ok(EXIT_OK)
        }
        Command::Generate { k, j, out } => {
            let (lab, report) = cmd_generate(CurveConstants::published(), k, j).map_err(|e| {
                eprintln!("error: curve self-check failed: {e}");
                EXIT_REJECTED
            })?;
            revalidate(report.pairs.iter().map(|g| g.pair())).map_err(internal)?;
            let summary = generate_summary(&report);
            let body = match format {
                Format::Structured => Envelope::new("generate", generate_output(&lab, &report)).to_json(),
                Format::Text => summary.clone(),
            };
            emit(out.as_ref(), &body)?;
            if format == Format::Structured || out.is_some() {
                eprint!("{summary}");
            }
            Ok(EXIT_OK)
        }
    }
}

fn internal(e: equiareal::triangle::PairInvariantError) -> i32 {
    eprintln!("internal error: emitted pair fails revalidation: {e}");
    EXIT_REJECTED
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli).unwrap_or_else(|code| code);
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
