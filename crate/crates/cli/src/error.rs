use thiserror::Error;

/// Exit code for a passing command.
pub const EXIT_PASS: i32 = 0;
/// Exit code for a mathematical failure: a failed axiom or a gate.
pub const EXIT_MATH: i32 = 1;
/// Exit code for unreadable, malformed or oversized input.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hopfpi::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if !e.is_input_error() => EXIT_MATH,
            _ => EXIT_INPUT,
        }
    }
}
