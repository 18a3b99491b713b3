//! Document format, report rendering and command implementations behind
//! the `hopfpi` binary.

pub mod args;
pub mod commands;
pub mod error;
pub mod format;
pub mod gallery;
pub mod report;

pub use args::Cli;
pub use commands::run;
pub use error::CliError;
pub use format::{encode, parse_document, Document, Structure};
pub use report::Outcome;
