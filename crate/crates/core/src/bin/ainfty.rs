use std::io::{Read, Write};
use std::process::ExitCode;

use clap::Parser;

use ainfty::io::{random_input, run, Command, Flags};

/// Checks A∞ structures, cones and cone decompositions stored in text files.
#[derive(Parser, Debug)]
#[command(name = "ainfty", version)]
struct Cli {
    /// check-complex, check-ainf, check-module, check-morphism, snake,
    /// cone-decomp, ts-compose, assemble, compose-compat, k0, index or
    /// yoneda-probe
    command: Command,
    /// Input file, `-` for standard input, or `random:<kind>` for a seeded
    /// random instance (complex, category, decomp, ts, datum)
    file: String,
    /// Section names for commands that take operands
    names: Vec<String>,
    /// Default arity cap for categories without a `cap` key
    #[arg(long, env = "AINF_ARITY_CAP", default_value_t = 4)]
    arity_cap: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Print the outcome as JSON
    #[arg(long)]
    json: bool,
    /// Print nothing; only the exit code matters
    #[arg(long)]
    quiet: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let flags = Flags { arity_cap: cli.arity_cap, seed: cli.seed, json: cli.json, quiet: cli.quiet };
    let input = if let Some(kind) = cli.file.strip_prefix("random:") {
        random_input(kind, cli.seed.unwrap_or(0)).map(String::into_bytes)
    } else if cli.file == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map(|_| buf).map_err(|e| e.to_string())
    } else {
        std::fs::read(&cli.file).map_err(|e| format!("{}: {e}", cli.file))
    };
    let input = match input {
        Ok(b) => b,
        Err(e) => {
            if !cli.quiet {
                eprintln!("ERROR {e}");
            }
            return ExitCode::from(2);
        }
    };
    let outcome = run(cli.command, &input, &cli.names, &flags);
    let _ = std::io::stdout().write_all(outcome.render(&flags).as_bytes());
    ExitCode::from(outcome.exit as u8)
}
