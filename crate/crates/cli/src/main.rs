//! `bellforge`: build, integrate and check Bell states of coherent-state
//! families. The JSON report goes to stdout, wall time to stderr.
//! Exit status is 0 when every check passes, 1 when one fails and 2 on
//! usage or I/O errors.

mod args;
mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{BellCommand, Cli, Command};
use output::{write_json, CliResult, Report};

fn print_report(report: &Report) -> CliResult<ExitCode> {
    println!("{}", serde_json::to_string_pretty(report)?);
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Bell(BellCommand::Make(a)) => print_report(&commands::bell_make(&a)?),
        Command::Bell(BellCommand::Integrate(a)) => print_report(&commands::bell_integrate(&a)?),
        Command::Verify(a) => print_report(&commands::verify(&a)?),
        Command::Matrix(a) => {
            let m = commands::matrix(&a)?;
            match &a.out {
                Some(path) => write_json(path, &m)?,
                None => println!("{}", serde_json::to_string(&m)?),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    };
    eprintln!("wall time: {:.3} s", start.elapsed().as_secs_f64());
    code
}
