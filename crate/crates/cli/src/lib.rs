//! Command-line harness around the `datagrinder` library.

pub mod args;
pub mod commands;
pub mod csv_io;
pub mod error;
pub mod folds;

use args::{Cli, Command};
pub use error::{CliError, Result};

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Hull(a) => commands::hull(a),
        Command::Bench(a) => commands::bench(a),
        Command::Gen(a) => commands::gen(a),
        Command::Train(a) => commands::train(a),
        Command::Predict(a) => commands::predict(a),
        Command::Cv(a) => commands::cv(a),
        Command::Experiment(a) => commands::experiment(a),
    }
}
