use std::io::Write;

use clap::Parser;
use motzkin_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.status as i32);
}
