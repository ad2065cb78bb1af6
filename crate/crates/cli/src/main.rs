use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use multitour_cli::commands::{self, CliError, Output, PiChoice, DEFAULT_ORACLE_CAP};

/// Multi-Eulerian tours of strongly connected directed multigraphs.
#[derive(Parser)]
#[command(name = "multitour", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tree counts, Pham index, primitive period vector, unicycles and minimal tour length.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Construct a pi-Eulerian tour.
    Tour {
        path: PathBuf,
        /// Comma-separated multipliers in vertex order, or `primitive`.
        #[arg(long, default_value = "primitive")]
        pi: PiChoice,
        #[arg(long)]
        start_vertex: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Count pi-Eulerian tours starting with a given edge.
    Count {
        path: PathBuf,
        #[arg(long, default_value = "primitive")]
        pi: PiChoice,
        #[arg(long, default_value_t = 0)]
        start_edge: usize,
        /// Cross-check against exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
        /// Largest tour length the enumeration accepts.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run rotor walks from random configurations and check how they settle.
    Rotor {
        path: PathBuf,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check a tour given as comma-separated edge ids.
    Verify {
        path: PathBuf,
        #[arg(long, default_value = "primitive")]
        pi: PiChoice,
        #[arg(long)]
        tour: String,
        #[arg(long)]
        json: bool,
    },
    /// List spanning trees oriented toward a root and compare with the determinant count.
    Trees {
        path: PathBuf,
        #[arg(long)]
        root: String,
        /// Largest number of choice functions to enumerate.
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Print the graph back in file format.
    Dump { path: PathBuf },
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Analyze { path, json } => commands::analyze(&commands::load_graph(&path)?, json),
        Command::Tour {
            path,
            pi,
            start_vertex,
            json,
        } => commands::tour(
            &commands::load_graph(&path)?,
            &pi,
            start_vertex.as_deref(),
            json,
        ),
        Command::Count {
            path,
            pi,
            start_edge,
            oracle,
            oracle_cap,
            json,
        } => commands::count(
            &commands::load_graph(&path)?,
            &pi,
            start_edge,
            oracle.then_some(oracle_cap),
            json,
        ),
        Command::Rotor {
            path,
            trials,
            seed,
            json,
        } => commands::rotor(&commands::load_graph(&path)?, trials, seed, json),
        Command::Verify {
            path,
            pi,
            tour,
            json,
        } => {
            let g = commands::load_graph(&path)?;
            commands::verify(&g, &pi, &commands::parse_tour(&tour)?, json)
        }
        Command::Trees {
            path,
            root,
            cap,
            json,
        } => commands::trees(&commands::load_graph(&path)?, &root, cap, json),
        Command::Dump { path } => Ok(commands::dump(&commands::load_graph(&path)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(output.text.as_bytes());
            ExitCode::from(output.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
