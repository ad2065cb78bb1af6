//! Graph file parsing and the subcommands behind the `multitour` binary.

pub mod commands;
pub mod format;

pub use commands::{CliError, Output, PiChoice};
pub use format::{dump_graph, parse_graph_file, ParseError};
