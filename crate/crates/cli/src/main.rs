mod args;
mod error;
mod run;

use args::Cli;
use clap::Parser;
use error::CliError;
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("hfree: cannot set up {t} threads: {e}");
            return ExitCode::from(1);
        }
    }
    match run::run(cli.command) {
        Ok(text) => {
            print!("{text}");
            let _ = std::io::stdout().flush();
            ExitCode::SUCCESS
        }
        Err(CliError::Verification(text)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("hfree: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
