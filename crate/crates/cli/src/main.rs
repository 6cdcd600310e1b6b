mod commands;
mod input;

use std::process::ExitCode;

use clap::Parser;

use crate::commands::Cli;
use crate::input::InputError;

/// Exit code for a failed command: 2 for bad input, 1 for internal failures.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<InputError>() || cause.is::<serde_json::Error>() || cause.is::<std::io::Error>() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<digitop::Error>() {
            return match e {
                digitop::Error::Invariant(_) | digitop::Error::NotPartialOrder(_) => 1,
                _ => 2,
            };
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
