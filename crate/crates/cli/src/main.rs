mod args;
mod commands;
mod grid;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use mnm_core::nmatrix::{builtin_with, Nmatrix, Reading, SystemId};
use mnm_core::syntax::{parse, Formula};
use serde_json::Value;

use args::Cli;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fails,
}

pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn usage(e: impl std::fmt::Display) -> CliError {
        CliError::Usage(e.to_string())
    }
}

/// What a command produced: its status, a JSON value and the text rendering
/// of the same result.
pub struct Report {
    pub status: Status,
    pub json: Value,
    pub text: String,
}

pub struct Ctx {
    pub system: Option<String>,
    pub seed: u64,
    pub strict: bool,
    pub jobs: usize,
}

impl Ctx {
    pub fn system(&self) -> Result<SystemId, CliError> {
        let name = self
            .system
            .as_deref()
            .ok_or_else(|| CliError::Usage("no system given: pass --system or set MNM_SYSTEM".into()))?;
        name.parse().map_err(CliError::usage)
    }

    pub fn reading(&self) -> Reading {
        if self.strict {
            Reading::Printed
        } else {
            Reading::Coherent
        }
    }

    pub fn nmatrix(&self) -> Result<(SystemId, Nmatrix), CliError> {
        let id = self.system()?;
        Ok((id, builtin_with(id, self.reading())))
    }
}

pub fn formula(text: &str) -> Result<Formula, CliError> {
    parse(text).map_err(|e| CliError::Usage(format!("cannot parse `{text}`: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = Ctx {
        system: cli.system.clone(),
        seed: cli.seed,
        strict: cli.strict_paper,
        jobs: cli.jobs,
    };
    let start = Instant::now();
    let result = commands::run(&ctx, &cli.command);
    let elapsed = start.elapsed().as_millis() as u64;
    match result {
        Ok(mut report) => {
            let mut out = std::io::stdout().lock();
            let written = if cli.json {
                if cli.timing {
                    if let Value::Object(map) = &mut report.json {
                        map.insert("time_ms".into(), elapsed.into());
                    }
                }
                match serde_json::to_string_pretty(&report.json) {
                    Ok(s) => writeln!(out, "{s}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(3);
                    }
                }
            } else {
                let mut text = report.text;
                if cli.timing {
                    text.push_str(&format!("time: {elapsed} ms\n"));
                }
                write!(out, "{text}")
            };
            if written.is_err() {
                return ExitCode::from(3);
            }
            match report.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Fails => ExitCode::from(1),
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
