//! Command-line front end: generator parsing, JSON output and oracle
//! verification sweeps around the core solvers.

pub mod app;
pub mod json;
pub mod parse;
pub mod verify;

pub use app::{run, Cli, CliError, Command};
pub use parse::{parse_generators, GeneratorExpr, ParseError};
