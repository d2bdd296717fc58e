mod args;
mod commands;
mod exit;
mod manifest;
mod parse;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::json;

use args::{Cli, Format};
use manifest::RunManifest;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(exit::INPUT);
        }
    }

    let start = Instant::now();
    let (command, params, outcome) = commands::run(&cli.command);
    let wall_time_ms = (!cli.deterministic).then(|| start.elapsed().as_secs_f64() * 1e3);

    let (code, result, text, message) = match outcome {
        Ok(r) => (r.code, r.result, r.text, None),
        Err(f) => {
            let (mut result, text) = f.partial.unwrap_or_else(|| (json!({}), String::new()));
            result["error"] = json!(f.message);
            (f.code, result, text, Some(f.message))
        }
    };

    match cli.format {
        Format::Json => {
            let manifest = RunManifest {
                command,
                params,
                version: env!("CARGO_PKG_VERSION").to_string(),
                wall_time_ms,
                exit_code: code,
                result,
            };
            println!("{}", manifest.to_json());
        }
        Format::Text => print!("{text}"),
    }
    if let Some(m) = message {
        eprintln!("error: {m}");
    }
    ExitCode::from(code)
}
