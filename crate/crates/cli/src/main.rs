//! `fsemi`: JSON reports on finite semigroups, their representations and
//! automata. Reports go to standard output, a one-line summary to standard
//! error.
//!
//! Exit status is 0 on success, 1 when the computation refuses (with a
//! witness in the report) and 2 on malformed input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "fsemi", version, about = "Finite semigroups, their radicals and triangularizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Indent the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Green's relations and the J-order.
    Greens { input: PathBuf },
    /// The Rhodes radical congruence over a field.
    Radical {
        #[arg(long)]
        field: String,
        input: PathBuf,
    },
    /// Membership in a named variety, e.g. `DA`, `LGK@F2`, `EGbar@3`.
    Variety {
        #[arg(long)]
        id: String,
        input: PathBuf,
    },
    /// Diagonalizability, triangularizability and related flags.
    Classify {
        #[arg(long)]
        field: String,
        input: PathBuf,
    },
    /// An explicit triangular form of the regular representation.
    Triangularize {
        #[arg(long)]
        field: String,
        #[arg(long, value_enum, default_value_t = Mode::Triangular)]
        mode: Mode,
        input: PathBuf,
    },
    /// A synchronizing word for a complete automaton.
    Sync {
        #[arg(long, value_enum, default_value_t = SyncMethod::Ds)]
        method: SyncMethod,
        input: PathBuf,
    },
    /// The syntactic monoid of the language of an automaton.
    Synmon { input: PathBuf },
    /// Counter matrices and unambiguity of a marked product.
    Marked {
        input: PathBuf,
        /// Words to test for membership; may be repeated.
        #[arg(long = "word")]
        words: Vec<String>,
    },
    /// Compares the radical with the congruence-lattice oracle.
    OracleCompare {
        #[arg(long)]
        field: String,
        input: PathBuf,
    },
    /// Lists the exhaustive or curated test corpus.
    Corpus {
        /// Every associative table up to this order (at most 3).
        #[arg(long, conflicts_with = "curated")]
        max_order: Option<usize>,
        /// The curated list of named semigroups.
        #[arg(long)]
        curated: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Triangular,
    Unitriangular,
}

#[derive(Clone, Copy, ValueEnum)]
enum SyncMethod {
    Ds,
    Bfs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(&cli.command);
    let (report, summary, code) = match outcome {
        Ok(out) => (out.report, out.summary, out.code),
        Err(e) => {
            let code = commands::exit_code(&e);
            (commands::error_report(&e), format!("error: {e}"), code)
        }
    };
    let text = if cli.pretty {
        serde_json::to_string_pretty(&report)
    } else {
        serde_json::to_string(&report)
    }
    .expect("reports are plain JSON");
    println!("{text}");
    eprintln!("{summary}");
    ExitCode::from(code)
}
