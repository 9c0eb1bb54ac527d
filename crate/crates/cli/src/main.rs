use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = match ringext_cli::Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (code, out) = ringext_cli::run(&cli);
    let _ = std::io::stdout().write_all(out.as_bytes());
    ExitCode::from(code as u8)
}
