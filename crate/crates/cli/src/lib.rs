//! File formats and commands of the `homf` command-line tool.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod json;
pub mod report;
pub mod schema;

pub use error::{CliError, Result};
