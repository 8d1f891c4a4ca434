mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hopfinv::exec::{set_thread_count, Execution};

/// Braided Hopf algebra invariants over exact cyclotomic arithmetic.
#[derive(Parser, Debug)]
#[command(name = "hopfinv", version)]
struct Cli {
    /// Worker threads for the parallel strategy (overrides HOPFINV_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Run every loop sequentially.
    #[arg(long, global = true)]
    sequential: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List catalog algebras up to a dimension.
    List {
        #[arg(long, default_value_t = 40)]
        max_dim: usize,
    },
    /// Show the dimension, braidings and simples of an algebra.
    Describe {
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// Compute P_A^(d), or P_{A,M} with --module.
    Invariant {
        algebra: String,
        #[arg(long, short)]
        degree: Option<usize>,
        /// Label of a single simple (module or comodule).
        #[arg(long, conflicts_with = "degree")]
        module: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Phi)]
        format: Format,
        #[arg(long, value_enum, default_value_t = PathArg::Generic)]
        path: PathArg,
    },
    /// Compare the invariants of two algebras degree by degree.
    Compare {
        left: String,
        right: String,
        /// Degrees to compare; repeatable. Defaults to 1 and 2.
        #[arg(long = "degree", short)]
        degrees: Vec<usize>,
        #[arg(long, value_enum, default_value_t = PathArg::Generic)]
        path: PathArg,
        #[arg(long)]
        json: bool,
    },
    /// Check the Hopf axioms, every R-matrix or braiding, and every simple.
    Validate { algebra: String },
    /// Print P^(1) and P^(2) for the tabulated algebras.
    Table {
        #[arg(long)]
        json: bool,
    },
    /// Fusion ring of the simple modules, with the relation checks when they apply.
    Repring {
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// Self-duality of A_N_n_±, with Gram checks of every braiding when small enough.
    Selfdual {
        algebra: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Phi,
    Coeffs,
    Roots,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PathArg {
    Generic,
    Closed,
    Both,
}

impl From<PathArg> for hopfinv::invariants::Path {
    fn from(p: PathArg) -> Self {
        match p {
            PathArg::Generic => hopfinv::invariants::Path::Generic,
            PathArg::Closed => hopfinv::invariants::Path::ClosedForm,
            PathArg::Both => hopfinv::invariants::Path::Both,
        }
    }
}

/// Exit status classes: 1 validation failure, 2 usage, 3 computation.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Usage(String),
    Computation(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Computation(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Usage(m) | CliError::Computation(m) => m,
        }
    }
}

fn configure_threads(flag: Option<usize>) -> Result<(), CliError> {
    let from_env = match std::env::var("HOPFINV_THREADS") {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("HOPFINV_THREADS={v:?} is not a count")))?),
        Err(_) => None,
    };
    match flag.or(from_env) {
        Some(0) => Err(CliError::Usage("thread count must be positive".into())),
        Some(n) => set_thread_count(n).map_err(CliError::Usage),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    configure_threads(cli.threads)?;
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    match cli.command {
        Command::List { max_dim } => commands::list(max_dim),
        Command::Describe { algebra, json } => commands::describe(&algebra, json),
        Command::Invariant { algebra, degree, module, format, path } => {
            commands::invariant(&algebra, degree, module.as_deref(), format, path.into(), exec)
        }
        Command::Compare { left, right, degrees, path, json } => {
            let degrees = if degrees.is_empty() { vec![1, 2] } else { degrees };
            commands::compare(&left, &right, &degrees, path.into(), json, exec)
        }
        Command::Validate { algebra } => commands::validate(&algebra, exec),
        Command::Table { json } => commands::table(json, exec),
        Command::Repring { algebra, json } => commands::repring(&algebra, json, exec),
        Command::Selfdual { algebra, json } => commands::selfdual(&algebra, json, exec),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let (text, code) = match run(cli) {
        Ok(text) => (text, 0),
        Err(CliError::Validation(text)) => (text, 1),
        Err(e) => {
            eprintln!("error: {}", e.message());
            return ExitCode::from(e.code());
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
