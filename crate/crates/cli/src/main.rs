mod args;
mod commands;
mod output;
mod verify;

use anyhow::Result;
use args::{Cli, Command};
use clap::error::ErrorKind;
use clap::Parser;
use conekit_core::report::csv_with_header;
use serde_json::json;
use std::process::ExitCode;

const EXIT_CONFIG: u8 = 1;
const EXIT_VERIFY: u8 = 2;

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("CONEKIT_THREADS") {
        let n: usize =
            v.trim().parse().map_err(|_| anyhow::anyhow!("CONEKIT_THREADS must be a positive integer, got {v:?}"))?;
        if n == 0 {
            anyhow::bail!("CONEKIT_THREADS must be a positive integer, got 0");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

/// Ok(true) when every verification check passed.
fn run(cli: Cli) -> Result<bool> {
    init_threads()?;
    match cli.command {
        Command::Spectrum(a) => commands::spectrum(&a)?,
        Command::Thresholds(a) => commands::thresholds(&a)?,
        Command::Kernel(a) => commands::kernel(&a)?,
        Command::Riesz(a) => commands::riesz(&a)?,
        Command::Probe(a) => commands::probe(&a)?,
        Command::Verify(a) => {
            let checks = verify::run(a.suite, a.output.seed)?;
            output::emit(
                &a.output,
                || {
                    let rows: Vec<Vec<String>> = checks
                        .iter()
                        .map(|c| vec![c.id.clone(), if c.pass { "PASS" } else { "FAIL" }.into(), c.detail.clone()])
                        .collect();
                    csv_with_header(&["check_id", "status", "detail"], &rows)
                },
                || json!(checks),
            )?;
            let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect();
            if !failed.is_empty() {
                eprintln!("conekit: verification failed: {}", failed.join(","));
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // clap errors span several lines; keep the message and the offending item
            let msg = e.to_string();
            let lines: Vec<&str> = msg.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
            let mut line =
                lines.first().copied().unwrap_or("invalid arguments").trim_start_matches("error: ").to_string();
            if line.ends_with(':') {
                if let Some(next) = lines.get(1) {
                    line = format!("{line} {next}");
                }
            }
            eprintln!("conekit: {line}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFY),
        Err(e) => {
            let msg = format!("{e:#}").replace('\n', " ");
            eprintln!("conekit: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
    }
}
