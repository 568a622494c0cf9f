//! File formats and the command-line front end for `quasiconvex`.

pub mod cli;
pub mod commands;
pub mod dsl;
pub mod error;
pub mod formats;
pub mod levelset;

pub use cli::{run, run_with};
pub use dsl::{parse_recurrence, ParseError};
pub use error::CliError;
