use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hopfpi_cli::error::EXIT_INPUT;
use hopfpi_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let outcome = run(&cli);
    let report = if cli.json {
        let mut s = serde_json::to_string_pretty(&outcome.render_json()).expect("report");
        s.push('\n');
        s
    } else {
        outcome.render_text()
    };
    // A document on stdout pushes the report to stderr.
    match &outcome.document {
        Some(doc) => {
            let _ = std::io::stdout().write_all(doc.as_bytes());
            let _ = std::io::stderr().write_all(report.as_bytes());
        }
        None => {
            let _ = std::io::stdout().write_all(report.as_bytes());
        }
    }
    ExitCode::from(outcome.exit_code() as u8)
}
