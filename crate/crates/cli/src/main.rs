use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use liefields_cli::commands::{self, Output, VerifyOptions};
use liefields_cli::CliError;
use liefields_core::catalog::ParamAssignment;
use liefields_core::exactnum::{Rational, Var};

#[derive(Parser)]
#[command(name = "liefields", version, about = "Exact left-invariant Killing, one-harmonic, conformal and concurrent fields on metric Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

// parsed once, so variant sizes do not matter
#[allow(clippy::large_enum_variant)]
#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file and compute its field spaces.
    Analyze {
        file: PathBuf,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// List the canonical five-dimensional types or write one to a file.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check the classification on random samples of each catalog type.
    Verify {
        /// A type id or `all`.
        #[arg(long = "type", default_value = "all")]
        type_selector: String,
        #[arg(long, default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Numerators and denominators are drawn from 1..=bound.
        #[arg(long, default_value_t = 10)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compare symbolic operators and determinants with the transcribed tables.
    VerifySymbolic {
        #[arg(long = "type", default_value = "all")]
        type_selector: String,
    },
}

#[allow(clippy::large_enum_variant)]
#[derive(Subcommand)]
enum CatalogAction {
    /// Print every type id with its parameter constraints.
    List,
    /// Instantiate a type at the given parameter values.
    Make {
        type_id: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<Rational>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Analyze { file, json } => commands::analyze(&file, json),
        Command::Catalog { action } => match action {
            CatalogAction::List => Ok(commands::catalog_list()),
            CatalogAction::Make {
                type_id,
                alpha,
                beta,
                gamma,
                delta,
                epsilon,
                sigma,
                output,
            } => {
                let params: ParamAssignment = [
                    (Var::Alpha, alpha),
                    (Var::Beta, beta),
                    (Var::Gamma, gamma),
                    (Var::Delta, delta),
                    (Var::Epsilon, epsilon),
                    (Var::Sigma, sigma),
                ]
                .into_iter()
                .filter_map(|(v, r)| r.map(|r| (v, r)))
                .collect();
                commands::catalog_make(&type_id, &params, output.as_deref())
            }
        },
        Command::Verify {
            type_selector,
            samples,
            seed,
            bound,
            json,
        } => commands::verify(&VerifyOptions {
            types: commands::select_types(&type_selector)?,
            samples,
            seed,
            bound,
            json,
        }),
        Command::VerifySymbolic { type_selector } => {
            Ok(commands::verify_symbolic(&commands::select_types(&type_selector)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
