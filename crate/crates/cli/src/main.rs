use std::process::ExitCode;

use clap::Parser;
use matinv_cli::{run, Command, RunConfig};

/// Exact computations with invariants of finite groups and of generic matrices.
#[derive(Parser)]
#[command(name = "matinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: RunConfig,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command, &cli.config) {
        Ok(outcome) => {
            let written = match &cli.config.output {
                Some(path) => std::fs::write(path, &outcome.report),
                None => {
                    print!("{}", outcome.report);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
