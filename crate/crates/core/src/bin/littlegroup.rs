use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use littlegroup::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let outcome = run(&cli);
    if let Some(msg) = &outcome.stderr {
        eprintln!("{msg}");
    }
    let mut out = std::io::stdout().lock();
    if out
        .write_all(outcome.stdout.as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.exit_code as u8)
}
