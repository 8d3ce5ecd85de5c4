use clap::Parser;
use lextri::cli::{run, Cli};
use std::io::Write;

fn main() {
    let out = run(Cli::parse());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.status as i32);
}
