mod request;
mod respond;

use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use rayon::prelude::*;
use serde_json::{json, Value};

use request::Command;
use respond::{respond, Failure};

/// Exact rational tangle calculus: RSR families, 2-bridge links and lens
/// space surgeries.
#[derive(Parser)]
#[command(name = "tanglekit", version, args_conflicts_with_subcommands = true)]
struct Cli {
    /// Read JSON-lines requests `{"command": ..., "args": {...}}` from FILE
    /// (`-` for standard input) and write one response line per request
    #[arg(long, value_name = "FILE")]
    batch: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

fn usage_error(kind: ErrorKind, message: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, message).exit()
}

fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("TANGLEKIT_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => builder = builder.num_threads(n),
            _ => usage_error(
                ErrorKind::InvalidValue,
                format!("TANGLEKIT_THREADS must be a positive integer, got {v:?}"),
            ),
        }
    }
    builder.build().expect("thread pool")
}

fn read_lines(path: &PathBuf) -> io::Result<Vec<String>> {
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(io::stdin().lock())
    } else {
        Box::new(BufReader::new(std::fs::File::open(path)?))
    };
    reader.lines().collect()
}

/// Writes whole lines to stdout; a closed pipe ends output silently.
fn emit<'a>(mut lines: impl Iterator<Item = &'a str>) {
    let mut out = io::BufWriter::new(io::stdout().lock());
    let result = lines
        .try_for_each(|l| writeln!(out, "{l}"))
        .and_then(|_| out.flush());
    match result {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("tanglekit: cannot write output: {e}");
            std::process::exit(1);
        }
        _ => {}
    }
}

fn batch_line(line: &str) -> Result<Value, Failure> {
    let command: Command = serde_json::from_str(line).map_err(|e| Failure::Request(e.to_string()))?;
    respond(&command)
}

fn run_batch(path: &PathBuf) -> ExitCode {
    let lines = match read_lines(path) {
        Ok(lines) => lines,
        Err(e) => usage_error(ErrorKind::Io, format!("cannot read {}: {e}", path.display())),
    };
    let requests: Vec<(usize, &str)> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.as_str()))
        .collect();
    let responses: Vec<(bool, String)> = thread_pool().install(|| {
        requests
            .par_iter()
            .map(|&(line, text)| {
                let (ok, body) = match batch_line(text) {
                    Ok(result) => (true, json!({ "line": line, "result": result })),
                    Err(e) => (false, json!({ "line": line, "error": e.to_json() })),
                };
                (ok, body.to_string())
            })
            .collect()
    });
    emit(responses.iter().map(|(_, text)| text.as_str()));
    if responses.iter().all(|(ok, _)| *ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match (&cli.batch, &cli.command) {
        (Some(path), None) => run_batch(path),
        (None, Some(command)) => {
            let (body, code) = match respond(command) {
                Ok(result) => (result, ExitCode::SUCCESS),
                Err(e) => (json!({ "error": e.to_json() }), ExitCode::from(1)),
            };
            emit(std::iter::once(body.to_string().as_str()));
            code
        }
        _ => usage_error(
            ErrorKind::MissingSubcommand,
            "a subcommand or --batch FILE is required",
        ),
    }
}
