use std::process::ExitCode;

use clap::Parser;
use roughdep::cli::{emit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command, &cli.config).and_then(|out| Ok((emit(&out, &cli.config)?, out)));
    match result {
        Ok((text, out)) => {
            print!("{text}");
            for f in &out.failures {
                eprintln!("asserted law refuted: {f}");
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
