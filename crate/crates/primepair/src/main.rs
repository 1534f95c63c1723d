use std::process::ExitCode;

use clap::Parser;
use primepair::cli::{self, Cli};
use primepair::error::exit;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let parsed = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { exit::OK as u8 });
        }
    };
    let result = cli::run(&parsed);
    log::info!("segments sieved: {}", primepair::parallel::segments_sieved());
    match result {
        Ok(()) => ExitCode::from(exit::OK as u8),
        Err(e) => {
            eprintln!("primepair: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
