//! `noncross`: sample, count and test random non-crossing configurations.

use clap::Parser;
use noncross_cli::{run, Cli, CliError};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Infeasible(m) => eprintln!("infeasible: {m}"),
                CliError::Io(m) => eprintln!("i/o error: {m}"),
                CliError::AcceptanceFailed => eprintln!("acceptance battery failed"),
            }
            ExitCode::from(e.code())
        }
    }
}
