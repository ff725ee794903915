use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = atinf_cli::Cli::parse();
    let out = atinf_cli::run(&cli.command);
    if let Some(note) = &out.stderr {
        let _ = std::io::stderr().write_all(note.as_bytes());
    }
    let _ = writeln!(std::io::stdout(), "{}", out.json);
    ExitCode::from(out.status.code())
}
