use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use curvext_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut stdout = std::io::stdout().lock();
    match run(&cli.command) {
        Ok(outcome) => {
            let _ = writeln!(stdout, "{}", outcome.record.render(cli.format));
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            // Machine output keeps errors on stdout so a single stream parses.
            match cli.format {
                curvext_cli::Format::Json => {
                    let _ = writeln!(stdout, "{}", e.render(cli.format));
                }
                curvext_cli::Format::Text => eprintln!("{}", e.render(cli.format)),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
