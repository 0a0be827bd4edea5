//! `ge`: command-line front end for the Gauss-Epple toolkit.
//!
//! Successful commands print one JSON document (or CSV for `walk`) on stdout
//! and exit 0. Failures print `{"status":"error","code":…,"message":…}` and
//! exit nonzero; no partial payload is ever written.

mod commands;
mod pretty;

use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use commands::{Cli, CliError};

#[derive(Serialize)]
struct ErrorReport<'a> {
    status: &'static str,
    code: &'a str,
    message: &'a str,
}

fn fail(code: &str, message: &str, exit: u8) -> ExitCode {
    let report = ErrorReport {
        status: "error",
        code,
        message,
    };
    println!("{}", serde_json::to_string(&report).expect("error reports serialize"));
    ExitCode::from(exit)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let text = e.to_string();
            let message: Vec<&str> = text
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty() && !l.starts_with("For more information"))
                .collect();
            return fail("usage", message.join(" ").trim_start_matches("error: "), 2);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Core(e)) => fail(e.code(), &e.to_string(), 1),
        Err(CliError::Io(msg)) => fail("io", &msg, 1),
        Err(CliError::Usage(msg)) => fail("usage", &msg, 2),
    }
}
