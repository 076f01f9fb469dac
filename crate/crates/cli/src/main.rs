use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fano95_cli::{run, Cli, EXIT_INPUT_ERROR};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT_ERROR as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = run(&cli);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
