use std::process::ExitCode;

use clap::Parser;
use cubic_codes::commands;
use cubic_codes::config::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match commands::run(&cli.command, &cli.common) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("cubic: {e}");
            return ExitCode::from(2);
        }
    };
    let text = report.render(cli.common.format);
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cubic: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
