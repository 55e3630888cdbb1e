use std::io;
use std::process::ExitCode;

use clap::Parser;
use coopgame::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdin = io::stdin().lock();
    let mut stdout = io::stdout().lock();
    match run(cli, &mut stdin, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("coopgame: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
