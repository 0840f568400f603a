use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use pathcover_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = io::stdin();
    match run(&cli, &mut stdin.lock()) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.render(cli.json).as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
