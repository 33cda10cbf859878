use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use quotori_cli::{render, run, run_batch, Command, Format, Job, Source};
use serde_json::json;

/// Exact computations for finite group actions on complex tori.
#[derive(Debug, Parser)]
#[command(name = "quotori", version)]
struct Args {
    /// What to compute.
    #[arg(value_enum)]
    command: Command,
    /// JSON input file (`-` for stdin).
    #[arg(long, conflicts_with_all = ["corpus", "batch"])]
    input: Option<PathBuf>,
    /// Use a bundled example input by name.
    #[arg(long, conflicts_with = "batch")]
    corpus: Option<String>,
    /// Run over every bundled example input.
    #[arg(long)]
    batch: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized steps (default 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Bound on group orders, or on defined cosets for `platonic`.
    #[arg(long)]
    bound: Option<usize>,
    /// Working precision in bits for approximate complex structures (default 128).
    #[arg(long)]
    precision: Option<u32>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.batch {
        let results = run_batch(args.command, args.seed, args.bound, args.precision);
        let code = results.iter().map(|(_, r)| r.as_ref().err().map_or(0, |e| e.exit_code())).max().unwrap_or(0);
        match args.format {
            Format::Json => {
                let entries: Vec<_> = results
                    .iter()
                    .map(|(name, r)| match r {
                        Ok(rep) => json!({ "name": name, "report": rep }),
                        Err(e) => json!({ "name": name, "error": e.to_string(), "exit_code": e.exit_code() }),
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&entries).expect("reports serialize"));
            }
            Format::Text => {
                for (name, r) in &results {
                    match r {
                        Ok(rep) => print!("{}", render(rep, Format::Text)),
                        Err(e) => println!("{name}: error: {e}"),
                    }
                }
            }
        }
        return ExitCode::from(code as u8);
    }
    let source = match (args.input, args.corpus) {
        (Some(p), _) => Source::Path(p),
        (None, Some(name)) => Source::Corpus(name),
        (None, None) => Source::Path(PathBuf::from("-")),
    };
    let job = Job { command: args.command, source, seed: args.seed, bound: args.bound, precision: args.precision };
    match run(&job) {
        Ok(report) => {
            print!("{}", render(&report, args.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("quotori: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
