//! `symideal` command-line interface.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 input error (including
//! usage errors), 3 a resource cap was exceeded.

mod commands;
mod range;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use symideal::{Caps, Execution};

#[derive(Debug, Parser)]
#[command(name = "symideal", version, about = "Symmetric-group representation theory of polynomial spaces")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Size cap applied to every exhaustive enumeration.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Seed for random generator certification.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Run sweeps on the current thread only.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn caps(&self) -> Caps {
        self.cap.map(Caps::uniform).unwrap_or_default()
    }

    pub fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KostkaMethod {
    Recursion,
    Enumerate,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Basis,
    Generator,
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partitions of d with P(d) and A000070(d).
    Partitions {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_parts: Option<usize>,
    },
    /// Kostka number K_{shape,content}.
    Kostka {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        content: String,
        #[arg(long, value_enum, default_value_t = KostkaMethod::Recursion)]
        method: KostkaMethod,
        /// Also print the semistandard tableaux.
        #[arg(long)]
        list: bool,
    },
    /// Specht module dimension f^shape by the hook length formula.
    SpechtDim {
        #[arg(long)]
        shape: String,
        /// Also print the standard tableaux.
        #[arg(long)]
        list: bool,
    },
    /// Character table of S_n.
    CharacterTable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Ascii)]
        format: TableFormat,
    },
    /// Canonical decomposition of the degree-d polynomials in n variables.
    DecomposeRd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Maximal r-generated submodule of R_d, or of a decomposition file.
    MaxSubmodule {
        #[arg(long)]
        r: usize,
        #[arg(long, required_unless_present = "decomposition")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "decomposition")]
        d: Option<usize>,
        #[arg(long, conflicts_with_all = ["n", "d"])]
        decomposition: Option<std::path::PathBuf>,
    },
    /// Minimal number of generators of a module given as decomposition JSON.
    MinGenerators {
        #[arg(long)]
        decomposition: std::path::PathBuf,
    },
    /// Minimal number of symmetric generators of the ideal spanned by the
    /// orbits of the polynomials in a file.
    MinGeneratorsIdeal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gens: std::path::PathBuf,
        /// Input format; defaults to JSON for `.json` files, text otherwise.
        #[arg(long, value_enum)]
        format: Option<PolyFormat>,
    },
    /// Build the degree-d component of the extremal ideal J.
    ConstructJ {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Emit::Report)]
        emit: Emit,
    },
    /// Compare dim of the maximal r-generated submodule with the bound.
    CheckBound {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
        n: Option<usize>,
        /// Inclusive range such as `4..12`.
        #[arg(long)]
        n_range: Option<String>,
    },
    /// Exhaustive verification sweeps.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Hilbert function of R/J.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// A single degree; all degrees 0..=d+1 when omitted.
        #[arg(long)]
        i: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// (n-1) K ≤ (#μ-1) f^λ for all λ ≠ (n), μ.
    Inequality {
        /// Inclusive range such as `4..9`, or a single value.
        #[arg(long)]
        n: String,
    },
    /// Recompute the two published tables for μ=(2,2,1) and μ=(2,2,2).
    Appendix,
    /// Ratio inequality for R_d decompositions.
    MainInequality {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: String,
    },
    /// Effective-bound equivalence on the (d, r, n) grid.
    BoundGrid {
        /// Inclusive degree range such as `2..6`.
        #[arg(long)]
        d: String,
        /// n runs over d+1 ..= d+extra-n.
        #[arg(long, default_value_t = 12)]
        extra_n: usize,
    },
    /// The elementary factorial inequality, in exact arithmetic.
    Elementary {
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        l_max: usize,
        #[arg(long, default_value_t = 10)]
        p_max: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(2),
            };
        }
    };
    match commands::run(&cli) {
        Ok(commands::Status::Ok) => ExitCode::SUCCESS,
        Ok(commands::Status::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
