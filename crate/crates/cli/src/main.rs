//! `symperiod`: regenerate the sphere and obstruction tables, check
//! 4-periodicity of symmetric-space products, and run the code-bound sweeps.

mod commands;
mod expr;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::EmbeddingSource;
use table::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("cannot read input: {0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    /// sysexits-style status.
    fn status(&self) -> u8 {
        match self {
            CliError::Parse(_) => 64,
            CliError::Data(_) => 65,
            CliError::Input(_) => 66,
            CliError::Io(_) => 74,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "symperiod", version, about = "Betti-level 4-periodicity of symmetric spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print table 1 (sphere dimensions), 2 (classical) or 3 (exceptional).
    Tables {
        id: u8,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check 4-periodicity up to degree c. Exit status 0 periodic, 1 fails, 2 undetermined.
    Check {
        /// Factors joined by ` x `, or two such products joined by `#`.
        expr: String,
        #[arg(long)]
        c: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every irreducible space in the catalog.
    Classify {
        #[arg(long, default_value_t = 16)]
        c: usize,
        #[arg(long, default_value_t = 64)]
        max_dim: u32,
        #[arg(long, default_value_t = 20)]
        max_param: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Binary linear code bounds.
    Codes {
        #[command(subcommand)]
        command: CodesCommand,
    },
    /// Symmetry-rank thresholds for a dimension and rank.
    Thresholds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        rank: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(clap::Args, Debug)]
struct InvolutionArgs {
    /// Generator matrix, one 0/1 row per line. Random embeddings are used otherwise.
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long, default_value_t = 64)]
    n: u64,
    #[arg(long, default_value_t = 2)]
    c: u64,
    #[arg(long, default_value_t = 12)]
    r: usize,
    #[arg(long, default_value_t = 32)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum CodesCommand {
    /// Least length of a binary code of dimension r and minimum weight w.
    Griesmer {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        w: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sweep the counting lemma over 2 <= c <= n <= n-max.
    AlgLemma {
        #[arg(long, default_value_t = 256)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustively verify the Griesmer bound for small codes.
    Verify {
        #[arg(long, default_value_t = 3)]
        r_max: usize,
        #[arg(long, default_value_t = 7)]
        m_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Find an involution of small even weight.
    Sigma(InvolutionArgs),
    /// Find sigma, then a second involution compatible with it.
    Tau(InvolutionArgs),
}

fn involutions(a: &InvolutionArgs, with_tau: bool) -> Result<commands::Output, CliError> {
    let src = EmbeddingSource { matrix: a.matrix.as_deref(), r: a.r, m: a.m, seed: a.seed, trials: a.trials };
    commands::involutions(src, a.n, a.c, with_tau, a.format)
}

fn run(cli: Cli) -> Result<commands::Output, CliError> {
    match cli.command {
        Command::Tables { id, format } => commands::tables(id, format),
        Command::Check { expr, c, format } => commands::check(&expr, c, format),
        Command::Classify { c, max_dim, max_param, format } => commands::classify(c, max_dim, max_param, format),
        Command::Thresholds { n, c, rank, format } => commands::thresholds(n, c, rank, format),
        Command::Codes { command } => match command {
            CodesCommand::Griesmer { r, w, format } => commands::griesmer(r, w, format),
            CodesCommand::AlgLemma { n_max, format } => commands::alg_lemma(n_max, format),
            CodesCommand::Verify { r_max, m_max, format } => commands::verify(r_max, m_max, format),
            CodesCommand::Sigma(a) => involutions(&a, false),
            CodesCommand::Tau(a) => involutions(&a, true),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(74);
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("symperiod: {e}");
            ExitCode::from(e.status())
        }
    }
}
