use std::process::ExitCode;

use clap::Parser;
use datagrinder_cli::args::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version requests are not errors
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match datagrinder_cli::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
