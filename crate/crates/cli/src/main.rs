use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod config;

use config::SourceFlags;

#[derive(Debug, Parser)]
#[command(
    name = "frodo",
    version,
    about = "Draft OWL ontologies from competency questions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Draft one ontology module per competency question.
    Draft(DraftArgs),
    /// Structural metrics for Turtle ontologies, as CSV.
    Metrics(MetricsArgs),
    /// Run the JSON API.
    Serve(ServeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Manchester,
    Turtle,
    Both,
}

#[derive(Debug, clap::Args)]
pub struct DraftArgs {
    /// A competency question (repeatable).
    #[arg(long = "cq", value_name = "TEXT")]
    pub cqs: Vec<String>,
    /// File with one question per line, optionally `id<TAB>text`.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Also write the merge of all drafts.
    #[arg(long)]
    pub merge: bool,
    #[arg(long, value_enum, default_value = "manchester")]
    pub format: Format,
    /// Also write the JSON payload of each draft.
    #[arg(long)]
    pub json: bool,
    /// Write what succeeded even when some questions fail.
    #[arg(long)]
    pub keep_going: bool,
    /// Worker threads for fetching and drafting.
    #[arg(long, value_name = "N")]
    pub jobs: Option<usize>,
    /// Namespace IRI for every draft instead of the per-question default.
    #[arg(long, value_name = "IRI")]
    pub namespace: Option<String>,
    #[arg(long, value_name = "DIR")]
    pub out_dir: Option<PathBuf>,
    #[command(flatten)]
    pub source: SourceFlags,
}

#[derive(Debug, clap::Args)]
pub struct MetricsArgs {
    /// Turtle files; one row each, in argument order.
    #[arg(required = true, value_name = "TTL")]
    pub files: Vec<PathBuf>,
    /// Write to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// JSON instead of CSV.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, clap::Args)]
pub struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub host: String,
    /// Allowed browser origin (repeatable; any origin when omitted).
    #[arg(long = "cors-origin", value_name = "ORIGIN")]
    pub cors_origins: Vec<String>,
    #[command(flatten)]
    pub source: SourceFlags,
}

/// A failed command, by exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Upstream(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Upstream(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Upstream(m) | Failure::Io(m) => m,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Draft(a) => commands::draft(a),
        Command::Metrics(a) => commands::metrics(a),
        Command::Serve(a) => commands::serve(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message().is_empty() {
                eprintln!("frodo: {}", f.message());
            }
            ExitCode::from(f.code())
        }
    }
}
