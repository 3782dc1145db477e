//! `unitform`: verify, standardize and compare matrix files over {0} ∪ ⟨ζ_k⟩.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "unitform", version, about = "Standard forms of matrices over roots of unity and zero")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the standard-form conditions and report the first violation of each.
    Verify {
        file: PathBuf,
        /// Unit exponents from smallest to largest, e.g. "0 2 1 3".
        #[arg(long)]
        order: Option<String>,
    },
    /// Reduce a matrix to standard form and emit the certificate.
    Standardize {
        file: PathBuf,
        #[arg(long)]
        order: Option<String>,
        /// Write the matrix here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the certificate here instead of stdout.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Run the four-step legacy reduction, which can stop short of standard form.
        #[arg(long)]
        legacy: bool,
        /// Print the intermediate legacy matrices W(1) to W(4).
        #[arg(long, requires = "legacy")]
        trace: bool,
    },
    /// Decide whether W W* = w I holds exactly.
    Gram { file: PathBuf },
    /// Compare two matrices by standard form, or exhaustively.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        order: Option<String>,
        /// Search all monomial pairs for a definitive answer.
        #[arg(long)]
        exhaustive: bool,
        /// Maximum number of candidates the exhaustive search may examine.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u128,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 4)]
        max_k: u32,
    },
    /// Group matrix files by their standard form.
    Dedup {
        /// Matrix files or directories of matrix files.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        order: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify { file, order } => commands::cmd_verify(&file, order.as_deref()),
        Command::Standardize {
            file,
            order,
            out,
            cert,
            legacy,
            trace,
        } => commands::cmd_standardize(&commands::StandardizeArgs {
            file,
            order,
            out,
            cert,
            legacy,
            trace,
        }),
        Command::Gram { file } => commands::cmd_gram(&file),
        Command::Compare {
            a,
            b,
            order,
            exhaustive,
            budget,
            max_dim,
            max_k,
        } => {
            let budget = exhaustive.then_some(unitform::OracleBudget {
                max_dim,
                max_order: max_k,
                max_applications: budget,
            });
            commands::cmd_compare(&a, &b, order.as_deref(), budget)
        }
        Command::Dedup { inputs, order } => commands::cmd_dedup(&inputs, order.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
