use std::process::ExitCode;

use clap::Parser;
use plethysm_cli::{execute, render, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(doc) => {
            print!("{}", render(&doc, cli.format));
            if doc.succeeded() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
